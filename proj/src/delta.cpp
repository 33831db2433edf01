#include "sset/delta.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace sset {

namespace {

void check_degree(Degree d) {
  if (d > kMaxDegree)
    throw DeltaError("degree " + std::to_string(d) + " exceeds the supported maximum " +
                     std::to_string(kMaxDegree));
}

}  // namespace

MonotoneMap::MonotoneMap(std::span<const Degree> values, Degree target) {
  if (values.empty())
    throw DeltaError("a monotone map needs at least one value");
  check_degree(static_cast<Degree>(values.size() - 1));
  check_degree(target);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > target)
      throw DeltaError("value " + std::to_string(values[i]) + " out of range [" +
                       std::to_string(target) + "]");
    if (i > 0 && values[i] < values[i - 1])
      throw DeltaError("values are not weakly increasing");
    values_[i] = static_cast<std::uint8_t>(values[i]);
  }
  size_ = static_cast<Degree>(values.size());
  target_ = target;
}

MonotoneMap MonotoneMap::identity(Degree p) {
  check_degree(p);
  MonotoneMap f;
  for (Degree i = 0; i <= p; ++i)
    f.values_[i] = static_cast<std::uint8_t>(i);
  f.size_ = p + 1;
  f.target_ = p;
  return f;
}

MonotoneMap MonotoneMap::coface(Degree i, Degree p) {
  if (p == 0 || i > p)
    throw DeltaError("coface d^" + std::to_string(i) + " into [" + std::to_string(p) +
                     "] does not exist");
  check_degree(p);
  MonotoneMap f;
  for (Degree j = 0; j < p; ++j)
    f.values_[j] = static_cast<std::uint8_t>(j < i ? j : j + 1);
  f.size_ = p;
  f.target_ = p;
  return f;
}

MonotoneMap MonotoneMap::codegeneracy(Degree i, Degree p) {
  if (i > p)
    throw DeltaError("codegeneracy s^" + std::to_string(i) + " onto [" + std::to_string(p) +
                     "] does not exist");
  check_degree(p + 1);
  MonotoneMap f;
  for (Degree j = 0; j <= p + 1; ++j)
    f.values_[j] = static_cast<std::uint8_t>(j <= i ? j : j - 1);
  f.size_ = p + 2;
  f.target_ = p;
  return f;
}

MonotoneMap MonotoneMap::constant(Degree p, Degree target, Degree value) {
  check_degree(p);
  check_degree(target);
  if (value > target)
    throw DeltaError("constant value out of range");
  MonotoneMap f;
  for (Degree j = 0; j <= p; ++j)
    f.values_[j] = static_cast<std::uint8_t>(value);
  f.size_ = p + 1;
  f.target_ = target;
  return f;
}

std::vector<Degree> MonotoneMap::values() const {
  return {values_.begin(), values_.begin() + size_};
}

bool MonotoneMap::is_identity() const {
  if (target_ + 1 != size_)
    return false;
  for (Degree i = 0; i < size_; ++i)
    if (values_[i] != i)
      return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  if (values_[0] != 0 || values_[size_ - 1] != target_)
    return false;
  for (Degree i = 1; i < size_; ++i)
    if (values_[i] > values_[i - 1] + 1)
      return false;
  return true;
}

bool MonotoneMap::is_injective() const {
  for (Degree i = 1; i < size_; ++i)
    if (values_[i] == values_[i - 1])
      return false;
  return true;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream out;
  out << '[' << source_degree() << "]->[" << target_ << "](";
  for (Degree i = 0; i < size_; ++i)
    out << (i ? "," : "") << static_cast<unsigned>(values_[i]);
  out << ')';
  return out.str();
}

std::strong_ordering operator<=>(const MonotoneMap& a, const MonotoneMap& b) {
  if (auto c = a.size_ <=> b.size_; c != 0)
    return c;
  if (auto c = a.target_ <=> b.target_; c != 0)
    return c;
  for (Degree i = 0; i < a.size_; ++i)
    if (auto c = a.values_[i] <=> b.values_[i]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::size_t MonotoneMap::hash() const {
  // FNV-1a over (size, target, values).
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(size_);
  mix(target_);
  for (Degree i = 0; i < size_; ++i)
    mix(values_[i]);
  return static_cast<std::size_t>(h);
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.source_degree() != g.target_degree())
    throw DeltaError("cannot compose " + f.to_string() + " after " + g.to_string());
  MonotoneMap h;
  for (Degree i = 0; i < g.size_; ++i)
    h.values_[i] = f.values_[g.values_[i]];
  h.size_ = g.size_;
  h.target_ = f.target_;
  return h;
}

MonotoneMap edge_map(Degree i, Degree r, Degree p) {
  if (i + r > p)
    throw DeltaError("edge (" + std::to_string(i) + "," + std::to_string(i + r) +
                     ") does not fit in [" + std::to_string(p) + "]");
  return MonotoneMap({i, i + r}, p);
}

EpiMono epi_mono_factor(const MonotoneMap& f) {
  std::vector<Degree> image;
  std::vector<Degree> epi;
  const Degree p = f.source_degree();
  epi.reserve(p + 1);
  for (Degree i = 0; i <= p; ++i) {
    if (image.empty() || image.back() != f(i))
      image.push_back(f(i));
    epi.push_back(static_cast<Degree>(image.size() - 1));
  }
  const auto q = static_cast<Degree>(image.size() - 1);
  return {MonotoneMap(epi, q), MonotoneMap(image, f.target_degree())};
}

std::uint64_t image_mask(const MonotoneMap& f) {
  std::uint64_t mask = 0;
  for (Degree i = 0; i <= f.source_degree(); ++i)
    mask |= std::uint64_t{1} << f(i);
  return mask;
}

MonotoneMap mono_from_mask(std::uint64_t mask, Degree target) {
  std::vector<Degree> values;
  for (Degree v = 0; v <= target; ++v)
    if (mask >> v & 1u)
      values.push_back(v);
  if (values.size() != static_cast<std::size_t>(std::popcount(mask)))
    throw DeltaError("mask has bits outside [" + std::to_string(target) + "]");
  return MonotoneMap(values, target);
}

SurjectionWord surjection_to_word(const MonotoneMap& f) {
  if (!f.is_surjective())
    throw DeltaError(f.to_string() + " is not surjective");
  SurjectionWord w;
  for (Degree j = f.source_degree(); j-- > 0;)
    if (f(j) == f(j + 1))
      w.indices.push_back(j);
  return w;
}

MonotoneMap word_to_surjection(const SurjectionWord& w, Degree p) {
  MonotoneMap result = MonotoneMap::identity(p);
  Degree current = p;
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    const Degree i = w.indices[k];
    if (k > 0 && i >= w.indices[k - 1])
      throw DeltaError("surjection word is not strictly decreasing");
    if (current == 0 || i >= current)
      throw DeltaError("surjection word index " + std::to_string(i) + " out of range");
    // s_{i1} ... s_{im} acts as sigma_{im} o ... o sigma_{i1}; sigma_{i1} is applied first.
    result = compose(MonotoneMap::codegeneracy(i, current - 1), result);
    --current;
  }
  return result;
}

std::vector<MonotoneMap> all_monotone_maps(Degree p, Degree q) {
  std::vector<MonotoneMap> out;
  std::vector<Degree> values(p + 1, 0);
  while (true) {
    out.emplace_back(values, q);
    // Advance to the next weakly increasing sequence in lexicographic order.
    std::size_t k = p + 1;
    while (k > 0 && values[k - 1] == q)
      --k;
    if (k == 0)
      break;
    const Degree v = values[k - 1] + 1;
    for (std::size_t j = k - 1; j <= p; ++j)
      values[j] = v;
  }
  return out;
}

std::vector<MonotoneMap> all_surjections(Degree p, Degree q) {
  std::vector<MonotoneMap> out;
  if (q > p)
    return out;
  // A surjection is determined by the set of positions j with f(j) == f(j+1).
  std::vector<Degree> values(p + 1);
  const Degree repeats = p - q;
  std::vector<bool> chosen(p, false);
  std::fill(chosen.end() - repeats, chosen.end(), true);
  do {
    values[0] = 0;
    for (Degree j = 0; j < p; ++j)
      values[j + 1] = values[j] + (chosen[j] ? 0 : 1);
    out.emplace_back(values, q);
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sset
