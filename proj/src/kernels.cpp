#include "kstab/kernels.hpp"

#include <algorithm>
#include <limits>

#include "kstab/error.hpp"

namespace kstab::kernels {

namespace {

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct Box {
  LatticeVector lo, hi;
};

Box dilated_box(const LatticePolytope& p, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "dilation level must be positive");
  return {k * p.box_min(), k * p.box_max()};
}

// Rejects inputs whose weight sums could leave the int64 range.
void check_range(const LatticePolytope& p, std::span<const AffinePiece> pieces, std::int64_t k) {
  const Box b = dilated_box(p, k);
  long double points = 1, coord = 0, coef = 1;
  for (int i = 0; i < p.dim(); ++i) {
    points *= static_cast<long double>(b.hi[i] - b.lo[i] + 1);
    coord = std::max<long double>(coord, std::max(std::abs(b.hi[i]), std::abs(b.lo[i])));
  }
  for (const auto& pc : pieces) {
    long double s = std::abs(static_cast<long double>(pc.constant)) * k;
    for (auto a : pc.linear) s += std::abs(static_cast<long double>(a)) * coord;
    coef = std::max(coef, s);
  }
  if (points * coef > 4.0e18L) throw Error(ErrorCode::kInvalidArgument, "dilate too large for 64-bit weight sums");
}

// Integer interval of the last coordinate on the line with the given leading coordinates.
// Returns lo > hi when empty.
std::pair<std::int64_t, std::int64_t> line_interval(const LatticePolytope& p, std::int64_t k, const LatticeVector& head,
                                                    std::int64_t lo, std::int64_t hi) {
  const int last = p.dim() - 1;
  for (const auto& f : p.facets()) {
    std::int64_t rest = k * f.offset;
    for (int i = 0; i < last; ++i) rest -= f.normal[i] * head[i];
    const std::int64_t c = f.normal[last];
    if (c > 0) lo = std::max(lo, ceil_div(rest, c));
    else if (c < 0) hi = std::min(hi, floor_div(-rest, -c));
    else if (rest > 0) return {1, 0};
  }
  return {lo, hi};
}

// Calls fn(head, lo, hi) for every line of kP with first coordinate x0, in lexicographic order.
template <class Fn>
void for_each_line(const LatticePolytope& p, std::int64_t k, const Box& box, std::int64_t x0, Fn&& fn) {
  const int last = p.dim() - 1;
  LatticeVector head(p.dim());
  head[0] = x0;
  auto emit = [&] {
    auto [lo, hi] = line_interval(p, k, head, box.lo[last], box.hi[last]);
    if (lo <= hi) fn(head, lo, hi);
  };
  if (p.dim() == 2) {
    emit();
    return;
  }
  for (std::int64_t y = box.lo[1]; y <= box.hi[1]; ++y) {
    head[1] = y;
    emit();
  }
}

// Bounding-box odometer for the reference kernels.
template <class Fn>
void for_each_box_point(const Box& box, int dim, Fn&& fn) {
  LatticeVector u = box.lo;
  while (true) {
    fn(u);
    int i = dim - 1;
    while (i >= 0 && u[i] == box.hi[i]) {
      u[i] = box.lo[i];
      --i;
    }
    if (i < 0) return;
    ++u[i];
  }
}

}  // namespace

std::vector<LatticeVector> enumerate(const LatticePolytope& p, std::int64_t k) {
  check_range(p, {}, k);
  const Box box = dilated_box(p, k);
  const std::int64_t x_lo = box.lo[0], x_hi = box.hi[0];
  std::vector<std::vector<LatticeVector>> slabs(static_cast<std::size_t>(x_hi - x_lo + 1));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t x = x_lo; x <= x_hi; ++x) {
    auto& slab = slabs[static_cast<std::size_t>(x - x_lo)];
    for_each_line(p, k, box, x, [&](const LatticeVector& head, std::int64_t lo, std::int64_t hi) {
      LatticeVector u = head;
      for (std::int64_t z = lo; z <= hi; ++z) {
        u[p.dim() - 1] = z;
        slab.push_back(u);
      }
    });
  }
  std::vector<LatticeVector> out;
  for (auto& s : slabs) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<LatticeVector> enumerate_reference(const LatticePolytope& p, std::int64_t k) {
  check_range(p, {}, k);
  const LatticePolytope kp = p.dilate(k);
  std::vector<LatticeVector> out;
  for_each_box_point(dilated_box(p, k), p.dim(), [&](const LatticeVector& u) {
    if (kp.contains(u)) out.push_back(u);
  });
  return out;
}

std::int64_t count(const LatticePolytope& p, std::int64_t k) {
  check_range(p, {}, k);
  const Box box = dilated_box(p, k);
  std::int64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t x = box.lo[0]; x <= box.hi[0]; ++x) {
    for_each_line(p, k, box, x,
                  [&](const LatticeVector&, std::int64_t lo, std::int64_t hi) { total += hi - lo + 1; });
  }
  return total;
}

std::int64_t count_reference(const LatticePolytope& p, std::int64_t k) {
  check_range(p, {}, k);
  const LatticePolytope kp = p.dilate(k);
  std::int64_t total = 0;
  for_each_box_point(dilated_box(p, k), p.dim(), [&](const LatticeVector& u) { total += kp.contains(u) ? 1 : 0; });
  return total;
}

WeightSums weight_sums(const LatticePolytope& p, std::span<const AffinePiece> pieces, std::int64_t k) {
  if (pieces.empty()) throw Error(ErrorCode::kInvalidArgument, "no affine pieces");
  check_range(p, pieces, k);
  const Box box = dilated_box(p, k);
  const int last = p.dim() - 1;
  const std::size_t m = pieces.size();
  std::int64_t count = 0, total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count, total)
  for (std::int64_t x = box.lo[0]; x <= box.hi[0]; ++x) {
    std::vector<std::int64_t> base(m), slope(m);
    for_each_line(p, k, box, x, [&](const LatticeVector& head, std::int64_t lo, std::int64_t hi) {
      // Each piece is affine along the line: base + slope * z.
      for (std::size_t i = 0; i < m; ++i) {
        std::int64_t b = k * pieces[i].constant;
        for (int j = 0; j < last; ++j) b += pieces[i].linear[j] * head[j];
        base[i] = b;
        slope[i] = pieces[i].linear[last];
      }
      for (std::int64_t z = lo; z <= hi; ++z) {
        std::int64_t w = std::numeric_limits<std::int64_t>::min();
        for (std::size_t i = 0; i < m; ++i) w = std::max(w, base[i] + slope[i] * z);
        total += w;
      }
      count += hi - lo + 1;
    });
  }
  return {count, total};
}

WeightSums weight_sums_reference(const LatticePolytope& p, std::span<const AffinePiece> pieces, std::int64_t k) {
  if (pieces.empty()) throw Error(ErrorCode::kInvalidArgument, "no affine pieces");
  check_range(p, pieces, k);
  const LatticePolytope kp = p.dilate(k);
  WeightSums s;
  for_each_box_point(dilated_box(p, k), p.dim(), [&](const LatticeVector& u) {
    if (!kp.contains(u)) return;
    std::int64_t w = std::numeric_limits<std::int64_t>::min();
    for (const auto& pc : pieces) w = std::max(w, pc.at_level(u, k));
    ++s.count;
    s.total += w;
  });
  return s;
}

}  // namespace kstab::kernels
