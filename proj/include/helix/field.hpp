#pragma once

#include <cstdint>
#include <span>
#include <vector>

// d-dimensional real sample fields (d <= 3) in a canonical linear layout with
// the FIRST axis fastest, and the helical (vectorizing) coordinate maps.
// With the canonical layout, the default column-wise helix p = m + M*n is the
// identity on the storage, so mapping degenerates to a copy.
//
// Fields are plain value types; treat them as immutable once shared between
// threads.

namespace helix {

struct Field {
  std::vector<std::int64_t> dims;  // axis lengths I1..Id, axis 0 fastest
  std::vector<double> steps;       // per-axis sampling periods, 1.0 if dimensionless
  std::vector<double> data;        // product(dims) samples, canonical layout
};

std::int64_t element_count(std::span<const std::int64_t> dims);

/// Validates invariants (1 <= d <= 3, dims positive, steps positive,
/// product(dims) == data length); throws ShapeError.
void validate(const Field& f);

Field make_field(std::vector<std::int64_t> dims, std::vector<double> steps,
                 std::vector<double> data);
Field zeros(std::vector<std::int64_t> dims, std::vector<double> steps);
/// All-axis unit steps.
Field zeros(std::vector<std::int64_t> dims);
/// Kronecker impulse at the origin.
Field unit_impulse(std::vector<std::int64_t> dims, std::vector<double> steps = {});

std::int64_t linear_index(std::span<const std::int64_t> idx,
                          std::span<const std::int64_t> dims);

// Axis permutation defining one helix: axes listed fastest to slowest. The
// last axis in the order is the unbounded (time-like) one.
struct HelicalOrder {
  std::vector<int> axes;
};

/// Identity order (0,1,...,d-1); realizes the column-wise map p = m + M*n.
HelicalOrder column_wise_order(int ndim);
/// Reversed order; realizes the row-wise map p = N*m + n.
HelicalOrder row_wise_order(int ndim);
void validate(const HelicalOrder& order, int ndim);

struct HelicalVector {
  std::vector<double> data;
  std::vector<std::int64_t> dims;  // originating field dims
  std::vector<double> steps;       // originating field steps
  HelicalOrder order;
};

/// Mixed-radix linear index of `idx` under `order`; bijective over the grid.
std::int64_t helical_index(std::span<const std::int64_t> idx,
                           std::span<const std::int64_t> dims,
                           const HelicalOrder& order);

HelicalVector helical_map(const Field& f, const HelicalOrder& order);
Field helical_unmap(const HelicalVector& v);

/// Reads `f` along the helix defined by `order` into `out` (size product(dims)).
void helical_read(const Field& f, const HelicalOrder& order, std::span<double> out);

/// Mode-`axis` unfolding: a 2-D field whose columns are the mode-`axis`
/// fibers, remaining axes enumerated in canonical order.
Field unfold(const Field& f, int axis);

}  // namespace helix
