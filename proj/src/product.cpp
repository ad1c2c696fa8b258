#include "ballean/product.hpp"

#include <stdexcept>

#include "ballean/errors.hpp"

namespace ballean {

PointedFamily::PointedFamily(std::vector<PointedFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw InputError("pointed family with no factors");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].size == 0) {
      throw InputError("pointed family: factor " + std::to_string(i) + " is empty");
    }
    if (factors_[i].basepoint >= factors_[i].size) {
      throw InputError("pointed family: basepoint out of range in factor " +
                       std::to_string(i));
    }
  }
}

std::size_t PointedFamily::total_size(std::size_t limit) const {
  std::size_t total = 1;
  for (const PointedFactor& f : factors_) {
    if (limit != 0 && total > limit / f.size) {
      throw ResourceError("product support exceeds limit of " + std::to_string(limit) +
                          " points");
    }
    total *= f.size;
  }
  if (limit != 0 && total > limit) {
    throw ResourceError("product support exceeds limit of " + std::to_string(limit) +
                        " points");
  }
  return total;
}

std::vector<std::size_t> PointedFamily::basepoint_tuple() const {
  std::vector<std::size_t> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = factors_[i].basepoint;
  }
  return coords;
}

std::size_t PointedFamily::index_of(const std::vector<std::size_t>& coords) const {
  if (coords.size() != factors_.size()) {
    throw InputError("coordinate tuple has wrong length");
  }
  std::size_t index = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (coords[i] >= factors_[i].size) {
      throw InputError("coordinate out of range in factor " + std::to_string(i));
    }
    index = index * factors_[i].size + coords[i];
  }
  return index;
}

std::vector<std::size_t> PointedFamily::coords_of(std::size_t index) const {
  std::vector<std::size_t> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = index % factors_[i].size;
    index /= factors_[i].size;
  }
  if (index != 0) {
    throw InputError("point index out of range");
  }
  return coords;
}

std::string product_point_name(const std::vector<std::size_t>& coords) {
  std::string name = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) {
      name += ',';
    }
    name += std::to_string(coords[i]);
  }
  name += ')';
  return name;
}

BallStructure build_product_ballean(const PointedFamily& family,
                                    std::size_t max_support) {
  const std::size_t n = family.total_size(max_support);
  const std::size_t gamma = family.factor_count();

  std::vector<std::string> support(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    support[idx] = product_point_name(family.coords_of(idx));
  }

  std::vector<std::string> radii(gamma);
  for (std::size_t r = 0; r < gamma; ++r) {
    radii[r] = std::to_string(r);
  }

  // With coordinate 0 fastest, tuples agreeing above coordinate r occupy a
  // contiguous index range whose width is the product of sizes 0..r.
  std::vector<std::size_t> width(gamma + 1, 1);
  for (std::size_t r = 0; r < gamma; ++r) {
    width[r + 1] = width[r] * family.factors()[r].size;
  }

  std::vector<std::vector<IndexSet>> balls(n, std::vector<IndexSet>(gamma, IndexSet(n)));
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (std::size_t r = 0; r < gamma; ++r) {
      const std::size_t w = width[r + 1];
      const std::size_t base = idx - idx % w;
      balls[idx][r].insert_range(base, base + w);
    }
  }
  return BallStructure(std::move(support), std::move(radii), std::move(balls));
}

std::vector<std::vector<std::size_t>> product_partition(const PointedFamily& family,
                                                        std::size_t level) {
  const std::size_t gamma = family.factor_count();
  if (level > gamma) {
    throw InputError("partition level out of range");
  }
  const std::size_t n = family.total_size();

  std::size_t width = 1;
  for (std::size_t r = 0; r < level; ++r) {
    width *= family.factors()[r].size;
  }

  std::vector<std::vector<std::size_t>> classes;
  classes.reserve(n / width);
  for (std::size_t base = 0; base < n; base += width) {
    std::vector<std::size_t> cls(width);
    for (std::size_t k = 0; k < width; ++k) {
      cls[k] = base + k;
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace ballean
