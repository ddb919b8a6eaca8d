#include "cuspgroup/curves.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cuspgroup/errors.hpp"

namespace cusp {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

constexpr std::int64_t kPrimeLimit = std::int64_t{1} << 31;

std::int64_t admissible_modulus(int n, bool need_mod4) {
  if (n < 2) throw InvalidParameter("n must be at least 2");
  std::int64_t m = 2L * n;
  return need_mod4 ? std::lcm(m, std::int64_t{4}) : m;
}

} // namespace

PrimeField::PrimeField(std::int64_t p) : p_(p), g_(0) {
  if (!is_prime(p) || p >= kPrimeLimit) throw InvalidParameter("not a usable prime: " + std::to_string(p));
  if (p == 2) {
    g_ = 1;
    return;
  }
  const auto factors = prime_factors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow(g, static_cast<std::uint64_t>((p - 1) / q)) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g_ = g;
      return;
    }
  }
}

std::int64_t PrimeField::reduce(std::int64_t a) const {
  a %= p_;
  return a < 0 ? a + p_ : a;
}

std::int64_t PrimeField::mul(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) * reduce(b)); }

std::int64_t PrimeField::pow(std::int64_t a, std::uint64_t e) const {
  std::int64_t r = 1 % p_, b = reduce(a);
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  if (reduce(a) == 0) throw InvalidParameter("inverse of zero");
  return pow(a, static_cast<std::uint64_t>(p_ - 2));
}

std::int64_t PrimeField::root_of_unity(std::int64_t m) const {
  if (m <= 0 || (p_ - 1) % m) throw InvalidParameter("no primitive " + std::to_string(m) + "-th root of unity mod " +
                                                     std::to_string(p_));
  return pow(g_, static_cast<std::uint64_t>((p_ - 1) / m));
}

std::vector<std::int64_t> admissible_primes(int n, std::int64_t minimum, std::size_t count) {
  const std::int64_t m = admissible_modulus(n, false);
  std::vector<std::int64_t> out;
  std::int64_t p = std::max<std::int64_t>(minimum, 2);
  p += ((1 - p) % m + m) % m;
  for (; out.size() < count; p += m) {
    if (p >= kPrimeLimit) throw Error("prime search exceeded 2^31");
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

PrimeField choose_prime(int n, std::int64_t minimum, bool need_mod4) {
  const std::int64_t m = admissible_modulus(n, need_mod4);
  std::int64_t p = std::max<std::int64_t>(minimum, 2);
  p += ((1 - p) % m + m) % m;
  for (; p < kPrimeLimit; p += m)
    if (is_prime(p)) return PrimeField(p);
  throw Error("prime search exceeded 2^31");
}

ProjectivePoint ProjectivePoint::make(const PrimeField& f, std::int64_t x, std::int64_t y, std::int64_t z) {
  std::int64_t c[3] = {f.reduce(x), f.reduce(y), f.reduce(z)};
  int lead = 0;
  while (lead < 3 && c[lead] == 0) ++lead;
  if (lead == 3) throw InvalidParameter("projective point with all coordinates zero");
  const std::int64_t s = f.inv(c[lead]);
  return {f.mul(c[0], s), f.mul(c[1], s), f.mul(c[2], s)};
}

int ProjectivePoint::chart() const { return x == 1 ? 0 : y == 1 ? 1 : 2; }

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << '[' << x << ':' << y << ':' << z << ']';
  return os.str();
}

TernaryForm::TernaryForm(int degree, const PrimeField& field)
    : d_(degree), field_(field), coeffs_(monomial_count(degree), 0) {
  if (degree < 0) throw InvalidParameter("negative form degree");
}

std::size_t TernaryForm::index(int d, int a, int b) {
  const int k = d - a;
  return static_cast<std::size_t>(k * (k + 1) / 2 + (k - b));
}

std::array<int, 3> TernaryForm::exponents(int d, std::size_t i) {
  int k = 0;
  while (static_cast<std::size_t>((k + 1) * (k + 2) / 2) <= i) ++k;
  const int b = k - static_cast<int>(i - static_cast<std::size_t>(k * (k + 1) / 2));
  return {d - k, b, k - b};
}

std::int64_t TernaryForm::coefficient(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0 || a + b + c != d_) return 0;
  return coeffs_[index(d_, a, b)];
}

void TernaryForm::set(int a, int b, int c, std::int64_t v) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != d_) throw InvalidParameter("monomial degree mismatch");
  coeffs_[index(d_, a, b)] = field_.reduce(v);
}

std::size_t TernaryForm::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; }));
}

std::int64_t TernaryForm::evaluate(std::int64_t x, std::int64_t y, std::int64_t z) const {
  const auto& f = field_;
  std::vector<std::int64_t> px(d_ + 1, 1), py(d_ + 1, 1), pz(d_ + 1, 1);
  for (int i = 1; i <= d_; ++i) {
    px[i] = f.mul(px[i - 1], x);
    py[i] = f.mul(py[i - 1], y);
    pz[i] = f.mul(pz[i - 1], z);
  }
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    auto [a, b, c] = exponents(d_, i);
    s = f.add(s, f.mul(coeffs_[i], f.mul(px[a], f.mul(py[b], pz[c]))));
  }
  return s;
}

TernaryForm TernaryForm::derivative(int var) const {
  if (d_ == 0) return TernaryForm(0, field_);
  TernaryForm out(d_ - 1, field_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    auto e = exponents(d_, i);
    if (e[var] == 0) continue;
    const std::int64_t k = e[var];
    --e[var];
    out.coeffs_[index(d_ - 1, e[0], e[1])] = field_.mul(coeffs_[i], k);
  }
  return out;
}

std::array<std::array<std::int64_t, 3>, 3> TernaryForm::hessian(const ProjectivePoint& p) const {
  std::array<std::array<std::int64_t, 3>, 3> h{};
  for (int i = 0; i < 3; ++i) {
    const TernaryForm di = derivative(i);
    for (int j = i; j < 3; ++j) h[i][j] = h[j][i] = di.derivative(j).evaluate(p);
  }
  return h;
}

bool TernaryForm::gradient_vanishes(const ProjectivePoint& p) const {
  for (int v = 0; v < 3; ++v)
    if (derivative(v).evaluate(p) != 0) return false;
  return true;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  const auto& f = a.field_;
  TernaryForm out(a.d_ + b.d_, f);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!a.coeffs_[i]) continue;
    const auto ea = TernaryForm::exponents(a.d_, i);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j]) continue;
      const auto eb = TernaryForm::exponents(b.d_, j);
      auto& c = out.coeffs_[TernaryForm::index(out.d_, ea[0] + eb[0], ea[1] + eb[1])];
      c = f.add(c, f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return out;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  if (a.d_ != b.d_) throw InvalidParameter("adding forms of different degree");
  TernaryForm out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.field_.add(a.coeffs_[i], b.coeffs_[i]);
  return out;
}

bool TernaryForm::proportional_to(const TernaryForm& other) const {
  if (d_ != other.d_) return false;
  std::size_t i = 0;
  while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
  if (i == coeffs_.size()) return other.nonzero_count() == 0;
  if (other.coeffs_[i] == 0) return false;
  const std::int64_t r = field_.mul(other.coeffs_[i], field_.inv(coeffs_[i]));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (field_.mul(coeffs_[j], r) != other.coeffs_[j]) return false;
  return true;
}

TernaryForm linear_form(const PrimeField& f, std::int64_t a, std::int64_t b, std::int64_t c) {
  TernaryForm l(1, f);
  l.set(1, 0, 0, a);
  l.set(0, 1, 0, b);
  l.set(0, 0, 1, c);
  return l;
}

TernaryForm power(const TernaryForm& f, int e) {
  if (e < 0) throw InvalidParameter("negative power of a form");
  TernaryForm r(0, f.field());
  r.set(0, 0, 0, 1);
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

TernaryForm curve_form(int n, const PrimeField& field) {
  if (n < 1) throw InvalidParameter("curve_form needs n >= 1");
  TernaryForm F(2 * n, field);
  F.set(2 * n, 0, 0, 1);
  F.set(0, 2 * n, 0, 1);
  F.set(0, 0, 2 * n, 1);
  F.set(n, 0, n, 2);
  F.set(n, n, 0, -2);
  F.set(0, n, n, 2);
  return F;
}

TernaryForm oka_form(int n, const PrimeField& field) {
  if (n < 1) throw InvalidParameter("oka_form needs n >= 1");
  TernaryForm yz(n, field), xy(2, field);
  yz.set(0, n, 0, 1);
  yz.set(0, 0, n, -1);
  xy.set(2, 0, 0, 1);
  xy.set(0, 2, 0, -1);
  return power(yz, 2) + power(xy, n);
}

std::vector<ProjectivePoint> singular_points(int n, const PrimeField& field) {
  if (n < 1) throw InvalidParameter("singular_points needs n >= 1");
  const std::int64_t w = field.root_of_unity(2L * n);
  const TernaryForm F = curve_form(n, field);
  std::vector<ProjectivePoint> pts;
  for (int k = 0; k < n; ++k) {
    const std::int64_t odd = field.pow(w, static_cast<std::uint64_t>(2 * k + 1));
    pts.push_back(ProjectivePoint::make(field, 0, 1, odd));
  }
  for (int k = 0; k < n; ++k) {
    const std::int64_t odd = field.pow(w, static_cast<std::uint64_t>(2 * k + 1));
    pts.push_back(ProjectivePoint::make(field, 1, 0, odd));
  }
  for (int k = 0; k < n; ++k) {
    const std::int64_t even = field.pow(w, static_cast<std::uint64_t>(2 * k));
    pts.push_back(ProjectivePoint::make(field, 1, even, 0));
  }
  for (const auto& p : pts)
    if (F.evaluate(p) != 0 || !F.gradient_vanishes(p))
      throw VerificationFailure("constructed point " + p.to_string() + " is not singular mod " +
                                std::to_string(field.characteristic()));
  return pts;
}

namespace {

template <class Visit>
void for_each_point(const PrimeField& f, Visit visit) {
  const std::int64_t p = f.characteristic();
  for (std::int64_t y = 0; y < p; ++y)
    for (std::int64_t z = 0; z < p; ++z) visit(ProjectivePoint{1, y, z});
  for (std::int64_t z = 0; z < p; ++z) visit(ProjectivePoint{0, 1, z});
  visit(ProjectivePoint{0, 0, 1});
}

} // namespace

std::vector<ProjectivePoint> singular_points_by_scan(const TernaryForm& F) {
  const TernaryForm dx = F.derivative(0), dy = F.derivative(1), dz = F.derivative(2);
  std::vector<ProjectivePoint> out;
  for_each_point(F.field(), [&](const ProjectivePoint& q) {
    if (F.evaluate(q) == 0 && dx.evaluate(q) == 0 && dy.evaluate(q) == 0 && dz.evaluate(q) == 0) out.push_back(q);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, const PrimeField& f) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && f.reduce(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::int64_t s = f.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = f.mul(v, s);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::int64_t k = f.reduce(rows[r][c]);
      if (!k) continue;
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(k, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

int tangent_cone_rank(const ProjectivePoint& pt, int n, const PrimeField& field) {
  const ProjectivePoint q = ProjectivePoint::make(field, pt.x, pt.y, pt.z);
  const TernaryForm F = curve_form(n, field);
  if (F.evaluate(q) != 0) throw NotSingular(q.to_string() + " is not on the curve");
  if (!F.gradient_vanishes(q)) throw NotSingular(q.to_string() + " is a smooth point");
  const auto h = F.hessian(q);
  const int chart = q.chart();
  std::vector<std::vector<std::int64_t>> m;
  for (int i = 0; i < 3; ++i) {
    if (i == chart) continue;
    std::vector<std::int64_t> row;
    for (int j = 0; j < 3; ++j)
      if (j != chart) row.push_back(h[i][j]);
    m.push_back(row);
  }
  return static_cast<int>(rank_mod_p(m, field));
}

SuperabundanceReport superabundance(int n, const std::vector<std::int64_t>& primes) {
  if (n < 3 || n % 2 == 0) throw InvalidParameter("superabundance needs odd n >= 3");
  if (primes.empty()) throw InvalidParameter("superabundance needs at least one prime");
  SuperabundanceReport rep;
  rep.n = n;
  rep.primes = primes;
  rep.points = 3 * static_cast<std::size_t>(n);
  rep.monomials = TernaryForm::monomial_count(n - 1);
  bool first = true;
  for (auto p : primes) {
    if (!is_prime(p) || (p - 1) % (2L * n)) throw InvalidParameter(std::to_string(p) + " is not admissible for n = " +
                                                                   std::to_string(n));
    const PrimeField field(p);
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& pt : singular_points(n, field)) {
      std::vector<std::int64_t> row;
      for (std::size_t i = 0; i < rep.monomials; ++i) {
        const auto e = TernaryForm::exponents(n - 1, i);
        row.push_back(field.mul(field.pow(pt.x, e[0]), field.mul(field.pow(pt.y, e[1]), field.pow(pt.z, e[2]))));
      }
      rows.push_back(std::move(row));
    }
    const std::size_t r = rank_mod_p(std::move(rows), field);
    if (first) {
      rep.rank = r;
      first = false;
    } else if (r != rep.rank) {
      throw RankDeficiencySuspect("rank " + std::to_string(r) + " mod " + std::to_string(p) + " differs from " +
                                  std::to_string(rep.rank));
    }
  }
  rep.h0 = rep.monomials - rep.rank;
  rep.s = static_cast<long>(rep.points) - static_cast<long>(rep.rank);
  rep.expected_h0 = static_cast<long>(n - 3) * (n - 2) / 2;
  return rep;
}

SuperabundanceReport superabundance(int n) { return superabundance(n, admissible_primes(n, 10000, 3)); }

QuasiAdjunctionData quasi_adjunction(int n) {
  if (n < 2) throw InvalidParameter("quasi_adjunction needs n >= 2");
  QuasiAdjunctionData q;
  q.n = n;
  q.kappa = mpq_class(n - 2, 2 * n);
  q.kappa.canonicalize();
  const mpq_class twist = mpq_class(2 * n - 3) - 2 * n * q.kappa;
  if (twist.get_den() != 1) throw VerificationFailure("twist degree is not integral");
  q.twist_degree = twist.get_num().get_si();
  return q;
}

mpq_class milnor_ratio(long n) {
  if (n < 2) throw InvalidParameter("milnor_ratio needs n >= 2");
  const mpz_class N = n;
  mpq_class r(3 * N * (N - 1), 4 * N * N);
  r.canonicalize();
  return r;
}

SplittingReport splitting_check_n2(const PrimeField& field) {
  const std::int64_t p = field.characteristic();
  if (p % 4 != 1) throw InvalidParameter("splitting check needs p = 1 mod 4");
  const TernaryForm F = curve_form(2, field);
  std::vector<ProjectivePoint> zeros;
  for_each_point(field, [&](const ProjectivePoint& q) {
    if (F.evaluate(q) == 0) zeros.push_back(q);
  });

  SplittingReport rep;
  rep.prime = p;
  // lines are points of the dual plane
  for_each_point(field, [&](const ProjectivePoint& l) {
    std::int64_t on = 0;
    for (const auto& q : zeros)
      if (field.add(field.add(field.mul(l.x, q.x), field.mul(l.y, q.y)), field.mul(l.z, q.z)) == 0) ++on;
    if (on == p + 1) rep.lines.push_back({l.x, l.y, l.z});
  });
  if (rep.lines.size() != 4)
    throw SplittingFailure("found " + std::to_string(rep.lines.size()) + " lines on F_2 mod " + std::to_string(p));

  TernaryForm prod(0, field);
  prod.set(0, 0, 0, 1);
  for (const auto& l : rep.lines) prod = prod * linear_form(field, l[0], l[1], l[2]);
  rep.product_matches = prod.proportional_to(F);
  if (!rep.product_matches) throw SplittingFailure("product of the lines is not proportional to F_2");

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto& a = rep.lines[i];
      const auto& b = rep.lines[j];
      rep.intersections.push_back(ProjectivePoint::make(field, field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])),
                                                        field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
                                                        field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0]))));
    }
  std::sort(rep.intersections.begin(), rep.intersections.end());
  if (std::adjacent_find(rep.intersections.begin(), rep.intersections.end()) != rep.intersections.end())
    throw SplittingFailure("pairwise intersections are not distinct");
  rep.branch_locus_nodes = singular_points(2, field).size();
  return rep;
}

} // namespace cusp
