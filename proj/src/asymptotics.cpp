#include "qcube/asymptotics.hpp"

#include <cmath>
#include <sstream>

#include "qcube/counting.hpp"
#include "qcube/phases.hpp"

namespace qcube {

namespace {
const long double kLog2E = 1.442695040888963407359924681001892137L;  // log2(e)
}  // namespace

long double log2_big(const BigCount& v) {
  if (v <= 0) throw std::invalid_argument("log2 of nonpositive");
  const long bits = static_cast<long>(boost::multiprecision::msb(v)) + 1;
  const long shift = bits > 62 ? bits - 62 : 0;
  const auto top = static_cast<uint64_t>(v >> shift);
  return std::log2(static_cast<long double>(top)) + shift;
}

LogValue theorem_value(TheoremTarget which, CubeDim dim) {
  const long double N = static_cast<long double>(dim.n());
  LogValue out;
  switch (which) {
    case TheoremTarget::C4:
      out.log2_value = N + std::log2(6.0L) + kLog2E;
      break;
    case TheoremTarget::C3:
      out.log2_value = N / 2 + std::log2(6.0L) + kLog2E;
      break;
    case TheoremTarget::ISets:
      out.log2_value = N / 2 + 1.0L + kLog2E / 2;
      break;
  }
  return out;
}

LogValue ideal_upper_bound(CubeDim dim) {
  const uint64_t N = dim.n();
  const uint64_t kmax = N / dim.d;
  BigCount sum = 0;
  for (uint64_t k = 0; k <= kmax; ++k)
    sum += binomial(N, k) * pow2(N - dim.d * k);
  LogValue out;
  out.exact = 6 * sum;
  out.log2_value = log2_big(*out.exact);
  return out;
}

bool ideal_upper_bound_below_6e2N(CubeDim dim) {
  // bound < 6*2^N*sum_{k<=K} 1/k! < 6e2^N: compare bound*K! with
  // 6*2^N*sum K!/k!, all exact integers.
  const uint64_t N = dim.n();
  const uint64_t K = N / dim.d;
  const BigCount bound = ideal_upper_bound(dim).exact.value();
  BigCount partial = 0;  // sum_{k<=K} K!/k!
  BigCount term = 1;     // K!/K!
  partial += term;
  for (uint64_t k = K; k >= 1; --k) {
    term *= k;  // now K!/(k-1)!
    partial += term;
  }
  return bound * factorial(K) <= 6 * pow2(N) * partial;
}

long double conjecture_f(int q, CubeDim dim) {
  const long double d = dim.d;
  const long double lo = std::floor(q / 2.0L), hi = std::ceil(q / 2.0L);
  return hi / (2 * lo) * std::pow(2 - 2 / hi, d) +
         lo / (2 * hi) * std::pow(2 - 2 / lo, d);
}

LogValue eg_conjecture_value(int q, CubeDim dim) {
  if (q < 2) throw std::invalid_argument("eg_conjecture_value: q >= 2");
  const long double N = static_cast<long double>(dim.n());
  const uint64_t lo = q / 2, hi = q - lo;
  LogValue out;
  out.log2_value = (q % 2 ? 1.0L : 0.0L);
  out.log2_value += std::log2(static_cast<long double>(
      static_cast<uint64_t>(binomial(q, lo))));
  out.log2_value += N / 2 * std::log2(static_cast<long double>(lo * hi));
  out.log2_value += conjecture_f(q, dim) * kLog2E;
  return out;
}

MpBound lemma_mp_bound(uint64_t g, uint64_t g_hat, CubeDim dim,
                       long double zeta) {
  const long double d = dim.d;
  const long double logd = std::log2(d);
  MpBound out;
  out.aggregate_log2 = -zeta * d / logd;
  if (g == 0 && static_cast<long double>(g_hat) <= d * d / logd) {
    out.first_branch = true;
    out.log2_value = -zeta * d;
  } else {
    long double gh = static_cast<long double>(g_hat);
    long double term = static_cast<long double>(g) / logd;
    if (g_hat > 0) term += gh / d * std::log2(gh / d);
    out.log2_value = -zeta * term;
  }
  return out;
}

std::vector<RatioRow> ratio_report(int d_lo, int d_hi, int q,
                                   const Config& cfg) {
  if (q < 2 || q > 4) throw std::invalid_argument("ratio_report: q in [2,4]");
  std::vector<RatioRow> rows;
  for (int d = d_lo; d <= d_hi; ++d) {
    CubeDim dim(d);
    RatioRow row;
    row.d = d;
    const int brute_max = (q == 2) ? 4 : 3;
    if (d <= brute_max)
      row.exact_count = count_colorings_bruteforce(dim, q).value;
    else if (d <= 4)
      row.exact_count = count_colorings_product(dim, q, cfg.threads).value;
    if (q == 4) {
      if (d <= 3) row.ideal_count = ideal_census(dim, cfg).census.value;
      row.ideal_bound = ideal_upper_bound(dim).exact;
      row.theorem_log2 = theorem_value(TheoremTarget::C4, dim).log2_value;
    } else if (q == 3) {
      row.theorem_log2 = theorem_value(TheoremTarget::C3, dim).log2_value;
    }
    if (row.exact_count && row.theorem_log2) {
      long double lg = log2_big(*row.exact_count);
      row.ratio_exact_to_theorem = std::exp2(lg - *row.theorem_log2);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {
template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, BigCount>) return to_decimal(*v);
  else {
    std::ostringstream os;
    os.precision(12);
    os << static_cast<double>(*v);
    return os.str();
  }
}
}  // namespace

std::string ratio_report_csv(const std::vector<RatioRow>& rows, int q) {
  std::ostringstream os;
  os << "d,q,exact,ideal_census,ideal_upper_bound,theorem_log2,"
        "ratio_exact_to_theorem\n";
  for (const auto& r : rows)
    os << r.d << ',' << q << ',' << opt_str(r.exact_count) << ','
       << opt_str(r.ideal_count) << ',' << opt_str(r.ideal_bound) << ','
       << opt_str(r.theorem_log2) << ',' << opt_str(r.ratio_exact_to_theorem)
       << '\n';
  return os.str();
}

std::string ratio_report_json(const std::vector<RatioRow>& rows, int q) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << (i ? ",\n " : "\n ") << "{\"d\": " << r.d << ", \"q\": " << q;
    if (r.exact_count) os << ", \"exact\": \"" << to_decimal(*r.exact_count) << '"';
    if (r.ideal_count)
      os << ", \"ideal_census\": \"" << to_decimal(*r.ideal_count) << '"';
    if (r.ideal_bound)
      os << ", \"ideal_upper_bound\": \"" << to_decimal(*r.ideal_bound) << '"';
    if (r.theorem_log2)
      os << ", \"theorem_log2\": " << static_cast<double>(*r.theorem_log2);
    if (r.ratio_exact_to_theorem)
      os << ", \"ratio_exact_to_theorem\": "
         << static_cast<double>(*r.ratio_exact_to_theorem);
    os << "}";
  }
  os << "\n]\n";
  return os.str();
}

}  // namespace qcube
