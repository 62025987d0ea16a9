#include "helix/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "helix/errors.hpp"

namespace helix {

std::int64_t element_count(std::span<const std::int64_t> dims) {
  std::int64_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

void validate(const Field& f) {
  if (f.dims.empty() || f.dims.size() > 3)
    throw ShapeError("field: dimension count must be 1..3, got " +
                     std::to_string(f.dims.size()));
  for (auto d : f.dims)
    if (d <= 0) throw ShapeError("field: axis lengths must be positive");
  if (f.steps.size() != f.dims.size())
    throw ShapeError("field: steps/dims arity mismatch");
  for (auto s : f.steps)
    if (!(s > 0.0)) throw ShapeError("field: sampling steps must be positive");
  if (static_cast<std::int64_t>(f.data.size()) != element_count(f.dims))
    throw ShapeError("field: data length " + std::to_string(f.data.size()) +
                     " does not match product(dims) " +
                     std::to_string(element_count(f.dims)));
}

Field make_field(std::vector<std::int64_t> dims, std::vector<double> steps,
                 std::vector<double> data) {
  Field f{std::move(dims), std::move(steps), std::move(data)};
  validate(f);
  return f;
}

Field zeros(std::vector<std::int64_t> dims, std::vector<double> steps) {
  const auto n = element_count(dims);
  Field f{std::move(dims), std::move(steps), std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  validate(f);
  return f;
}

Field zeros(std::vector<std::int64_t> dims) {
  std::vector<double> steps(dims.size(), 1.0);
  return zeros(std::move(dims), std::move(steps));
}

Field unit_impulse(std::vector<std::int64_t> dims, std::vector<double> steps) {
  if (steps.empty()) steps.assign(dims.size(), 1.0);
  Field f = zeros(std::move(dims), std::move(steps));
  f.data[0] = 1.0;
  return f;
}

std::int64_t linear_index(std::span<const std::int64_t> idx,
                          std::span<const std::int64_t> dims) {
  std::int64_t p = 0, stride = 1;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    p += idx[a] * stride;
    stride *= dims[a];
  }
  return p;
}

HelicalOrder column_wise_order(int ndim) {
  HelicalOrder o;
  o.axes.resize(static_cast<std::size_t>(ndim));
  std::iota(o.axes.begin(), o.axes.end(), 0);
  return o;
}

HelicalOrder row_wise_order(int ndim) {
  HelicalOrder o = column_wise_order(ndim);
  std::reverse(o.axes.begin(), o.axes.end());
  return o;
}

void validate(const HelicalOrder& order, int ndim) {
  if (static_cast<int>(order.axes.size()) != ndim)
    throw ShapeError("helical order: arity mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(ndim), false);
  for (int a : order.axes) {
    if (a < 0 || a >= ndim || seen[static_cast<std::size_t>(a)])
      throw ShapeError("helical order: axes must be a permutation of 0..d-1");
    seen[static_cast<std::size_t>(a)] = true;
  }
}

std::int64_t helical_index(std::span<const std::int64_t> idx,
                           std::span<const std::int64_t> dims,
                           const HelicalOrder& order) {
  if (idx.size() != dims.size())
    throw ShapeError("helical_index: index arity mismatch");
  validate(order, static_cast<int>(dims.size()));
  for (std::size_t a = 0; a < dims.size(); ++a)
    if (idx[a] < 0 || idx[a] >= dims[a])
      throw ShapeError("helical_index: index out of range on axis " + std::to_string(a));
  std::int64_t p = 0, stride = 1;
  for (int axis : order.axes) {
    p += idx[static_cast<std::size_t>(axis)] * stride;
    stride *= dims[static_cast<std::size_t>(axis)];
  }
  return p;
}

namespace {

bool is_identity(const HelicalOrder& order) {
  for (std::size_t a = 0; a < order.axes.size(); ++a)
    if (order.axes[a] != static_cast<int>(a)) return false;
  return true;
}

// strides of the helix index per original axis
std::vector<std::int64_t> helix_strides(std::span<const std::int64_t> dims,
                                        const HelicalOrder& order) {
  std::vector<std::int64_t> strides(dims.size(), 0);
  std::int64_t stride = 1;
  for (int axis : order.axes) {
    strides[static_cast<std::size_t>(axis)] = stride;
    stride *= dims[static_cast<std::size_t>(axis)];
  }
  return strides;
}

}  // namespace

void helical_read(const Field& f, const HelicalOrder& order, std::span<double> out) {
  validate(f);
  validate(order, static_cast<int>(f.dims.size()));
  if (out.size() != f.data.size()) throw ShapeError("helical_read: output size mismatch");
  if (is_identity(order)) {
    std::copy(f.data.begin(), f.data.end(), out.begin());
    return;
  }
  const auto strides = helix_strides(f.dims, order);
  std::vector<std::int64_t> idx(f.dims.size(), 0);
  for (std::int64_t lin = 0; lin < static_cast<std::int64_t>(f.data.size()); ++lin) {
    std::int64_t p = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) p += idx[a] * strides[a];
    out[static_cast<std::size_t>(p)] = f.data[static_cast<std::size_t>(lin)];
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (++idx[a] < f.dims[a]) break;
      idx[a] = 0;
    }
  }
}

HelicalVector helical_map(const Field& f, const HelicalOrder& order) {
  HelicalVector v;
  v.data.resize(f.data.size());
  helical_read(f, order, v.data);
  v.dims = f.dims;
  v.steps = f.steps;
  v.order = order;
  return v;
}

Field helical_unmap(const HelicalVector& v) {
  if (static_cast<std::int64_t>(v.data.size()) != element_count(v.dims))
    throw ShapeError("helical_unmap: vector length does not match product(dims)");
  validate(v.order, static_cast<int>(v.dims.size()));
  Field f = zeros(v.dims, v.steps);
  if (is_identity(v.order)) {
    f.data = v.data;
    return f;
  }
  const auto strides = helix_strides(v.dims, v.order);
  std::vector<std::int64_t> idx(v.dims.size(), 0);
  for (std::int64_t lin = 0; lin < static_cast<std::int64_t>(v.data.size()); ++lin) {
    std::int64_t p = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) p += idx[a] * strides[a];
    f.data[static_cast<std::size_t>(lin)] = v.data[static_cast<std::size_t>(p)];
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (++idx[a] < v.dims[a]) break;
      idx[a] = 0;
    }
  }
  return f;
}

Field unfold(const Field& f, int axis) {
  validate(f);
  const int d = static_cast<int>(f.dims.size());
  if (axis < 0 || axis >= d) throw ShapeError("unfold: axis out of range");
  const std::int64_t fiber_len = f.dims[static_cast<std::size_t>(axis)];
  const std::int64_t n_fibers = element_count(f.dims) / fiber_len;
  Field m = zeros({fiber_len, n_fibers}, {f.steps[static_cast<std::size_t>(axis)], 1.0});

  // enumerate fibers: remaining axes in canonical order, first fastest
  std::vector<std::int64_t> rest_dims;
  std::vector<int> rest_axes;
  for (int a = 0; a < d; ++a) {
    if (a != axis) {
      rest_axes.push_back(a);
      rest_dims.push_back(f.dims[static_cast<std::size_t>(a)]);
    }
  }
  std::vector<std::int64_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<std::int64_t> rest_idx(rest_axes.size(), 0);
  for (std::int64_t col = 0; col < n_fibers; ++col) {
    for (std::size_t a = 0; a < rest_axes.size(); ++a)
      idx[static_cast<std::size_t>(rest_axes[a])] = rest_idx[a];
    for (std::int64_t i = 0; i < fiber_len; ++i) {
      idx[static_cast<std::size_t>(axis)] = i;
      m.data[static_cast<std::size_t>(col * fiber_len + i)] =
          f.data[static_cast<std::size_t>(linear_index(idx, f.dims))];
    }
    for (std::size_t a = 0; a < rest_idx.size(); ++a) {
      if (++rest_idx[a] < rest_dims[a]) break;
      rest_idx[a] = 0;
    }
  }
  return m;
}

}  // namespace helix
