#include "gcat/homology.hpp"

#include <stdexcept>

#include "gcat/smith.hpp"

namespace gcat {

namespace {

void check_complex(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
  if (d_out.cols() != d_in.rows()) {
    throw std::invalid_argument("homology: d_out has " + std::to_string(d_out.cols()) +
                                " columns but d_in has " + std::to_string(d_in.rows()) + " rows");
  }
  if (!(d_out * d_in).is_zero()) throw std::invalid_argument("homology: d_out * d_in != 0");
}

std::vector<Integer> to_dense(const SparseVector& v, std::size_t n) {
  std::vector<Integer> d(n);
  for (const auto& e : v) d.at(e.index) = e.value;
  return d;
}

SparseVector from_dense(const std::vector<Integer>& d) {
  SparseVector v;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) v.push_back({i, d[i]});
  }
  return v;
}

}  // namespace

HomologySummary homology(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
  check_complex(d_out, d_in);
  std::size_t rank_out = invariant_factors(d_out).size();
  auto in_factors = invariant_factors(d_in);
  HomologySummary h;
  h.betti = d_out.cols() - rank_out - in_factors.size();
  for (auto& d : in_factors) {
    if (!d.is_unit()) h.torsion.push_back(d);
  }
  return h;
}

HomologyContext::HomologyContext(SparseIntMatrix d_out, SparseIntMatrix d_in)
    : d_out_(std::move(d_out)), d_in_(std::move(d_in)) {
  check_complex(d_out_, d_in_);
  const std::size_t m = d_out_.cols();
  auto out = smith_normal_form(d_out_, SnfTransforms{false, false, true, true});
  out_rank_ = out.rank();
  kernel_dim_ = m - out_rank_;
  kernel_basis_ = out.right->column_block(out_rank_, m);
  auto vinv_rows = out.right_inverse->row_vectors();
  kernel_projection_.assign(vinv_rows.begin() + static_cast<std::ptrdiff_t>(out_rank_), vinv_rows.end());

  SparseIntMatrix x = SparseIntMatrix::from_rows(m, kernel_projection_) * d_in_;
  auto in = smith_normal_form(x, SnfTransforms{true, true, false, false});
  in_factors_ = in.factors;
  in_left_ = std::move(*in.left);
  in_left_inverse_ = std::move(*in.left_inverse);
  betti_ = kernel_dim_ - in_factors_.size();
  torsion_ = in.torsion();
}

HomologySummary HomologyContext::summary() const {
  HomologySummary h;
  h.betti = betti_;
  h.torsion = torsion_;
  auto gens = free_generators();
  auto tors = torsion_generators();
  gens.insert(gens.end(), tors.begin(), tors.end());
  h.generators = std::move(gens);
  return h;
}

std::vector<SparseVector> HomologyContext::free_generators() const {
  std::vector<SparseVector> gens;
  for (std::size_t j = in_factors_.size(); j < kernel_dim_; ++j) {
    gens.push_back(kernel_basis_.apply(in_left_inverse_.column(j)));
  }
  return gens;
}

std::vector<SparseVector> HomologyContext::torsion_generators() const {
  std::vector<SparseVector> gens;
  for (std::size_t j = 0; j < in_factors_.size(); ++j) {
    if (!in_factors_[j].is_unit()) gens.push_back(kernel_basis_.apply(in_left_inverse_.column(j)));
  }
  return gens;
}

bool HomologyContext::is_cycle(const SparseVector& z) const { return d_out_.apply(z).empty(); }

std::vector<Integer> HomologyContext::kernel_coordinates(const SparseVector& z) const {
  if (!is_cycle(z)) throw std::invalid_argument("HomologyContext: vector is not a cycle");
  std::vector<Integer> y(kernel_dim_);
  for (std::size_t i = 0; i < kernel_dim_; ++i) y[i] = dot(kernel_projection_[i], z);
  return to_dense(in_left_.apply(from_dense(y)), kernel_dim_);
}

std::vector<Integer> HomologyContext::free_coordinates(const SparseVector& z) const {
  auto u = kernel_coordinates(z);
  return {u.begin() + static_cast<std::ptrdiff_t>(in_factors_.size()), u.end()};
}

std::vector<Integer> HomologyContext::torsion_coordinates(const SparseVector& z) const {
  auto u = kernel_coordinates(z);
  std::vector<Integer> t;
  for (std::size_t j = 0; j < in_factors_.size(); ++j) {
    if (in_factors_[j].is_unit()) continue;
    Integer r = u[j] % in_factors_[j];
    if (r.sign() < 0) r += in_factors_[j];
    t.push_back(r);
  }
  return t;
}

bool HomologyContext::is_boundary(const SparseVector& z) const {
  auto u = kernel_coordinates(z);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j < in_factors_.size()) {
      if (!(u[j] % in_factors_[j]).is_zero()) return false;
    } else if (!u[j].is_zero()) {
      return false;
    }
  }
  return true;
}

SparseIntMatrix induced_map_on_homology(const SparseIntMatrix& f, const HomologyContext& source,
                                        const HomologyContext& target) {
  if (f.cols() != source.chain_rank() || f.rows() != target.chain_rank()) {
    throw std::invalid_argument("induced_map_on_homology: chain map has the wrong shape");
  }
  for (const auto& z : source.free_generators()) {
    if (!target.is_cycle(f.apply(z))) {
      throw std::invalid_argument("induced_map_on_homology: map does not send cycles to cycles");
    }
  }
  for (const auto& z : source.torsion_generators()) {
    if (!target.is_cycle(f.apply(z))) {
      throw std::invalid_argument("induced_map_on_homology: map does not send cycles to cycles");
    }
  }
  SparseIntMatrix boundaries = f * source.d_in();
  for (const auto& b : boundaries.columns()) {
    if (!target.is_cycle(b) || !target.is_boundary(b)) {
      throw std::invalid_argument("induced_map_on_homology: map does not send boundaries to boundaries");
    }
  }
  auto gens = source.free_generators();
  SparseIntMatrix m(target.betti(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto coords = target.free_coordinates(f.apply(gens[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) m.set(i, j, coords[i]);
  }
  return m;
}

bool spans_lattice(const SparseIntMatrix& columns) {
  auto factors = invariant_factors(columns);
  if (factors.size() != columns.rows()) return false;
  for (const auto& d : factors) {
    if (!d.is_unit()) return false;
  }
  return true;
}

}  // namespace gcat
