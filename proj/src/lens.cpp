#include "wrt/lens.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace wrt {

LensSpace normalize_lens(long long p, long long q) {
  if (p < 1) throw DomainError("normalize_lens: p must be positive");
  long long qm = ((q % p) + p) % p;  // q mod p in [0, p)
  if (std::gcd(p, qm) != 1 && p != 1)
    throw DomainError("normalize_lens: gcd(p, q) != 1");
  if (p == 1) return {1, 0, true};
  return {p, qm - p, true};  // in (-p, 0)
}

std::string InvariantResult::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["q"] = q;
  j["r"] = r;
  j["cf"] = cf;
  j["phi"] = phi;
  j["weight"] = weight;
  j["method"] = method;
  j["numeric"] = {{"re", numeric.real()}, {"im", numeric.imag()}};
  if (exact) j["exact"] = nlohmann::json::parse(exact->to_json());
  return j.dump();
}

namespace {

long long inverse_mod(long long x, long long p) {
  long long xm = ((x % p) + p) % p;
  long long t = 0, newt = 1, r0 = p, newr = xm;
  while (newr != 0) {
    long long quot = r0 / newr;
    std::tie(t, newt) = std::make_pair(newt, t - quot * newt);
    std::tie(r0, newr) = std::make_pair(newr, r0 - quot * newr);
  }
  return ((t % p) + p) % p;
}

// One (r, p) block: both paths for every admissible q, plus the per-row
// cross-checks. Pure; blocks run concurrently and are merged in order.
template <class B>
std::vector<VerifyRow> grid_block(long long r, long long p) {
  std::map<long long, InvariantResult> closed_by_q;
  std::map<long long, InvariantResult> oracle_by_q;
  for (long long q = -p + 1; q <= -1; ++q) {
    if (std::gcd(p, -q) != 1) continue;
    oracle_by_q.emplace(q, wrt_oracle<B>(p, q, r));
    closed_by_q.emplace(q, wrt_closed<B>(p, q, r));
  }
  std::vector<VerifyRow> rows;
  // Rows in lexicographic (r, p, -q) order: q from -1 downwards.
  for (long long q = -1; q >= -p + 1; --q) {
    auto ito = oracle_by_q.find(q);
    if (ito == oracle_by_q.end()) continue;
    const InvariantResult& oracle = ito->second;
    const InvariantResult& closed = closed_by_q.at(q);
    VerifyRow row;
    row.r = r;
    row.p = p;
    row.q = q;
    row.phi = oracle.phi;
    row.value = oracle.numeric;
    row.deviation = std::abs(closed.numeric - oracle.numeric);
    if constexpr (B::kExact) {
      row.exact_equal = (*closed.exact == *oracle.exact);
    }
    // Phi three ways: matrix form, chain form, trace - 3 signature.
    auto [cf, u] = cf_for_lens(p, q);
    LinkingData link = linking_data(cf);
    long long phi_chain = rademacher_phi_cf(cf);
    long long phi_link = link.trace - 3 * link.signature;
    row.phi_ok = (oracle.phi == phi_chain) && (oracle.phi == phi_link);
    // Homeomorphism q <-> q^{-1} (mod p), normalized into (-p, 0).
    long long qstar = inverse_mod(q, p) - p;
    row.homeo_deviation =
        std::abs(oracle.numeric - oracle_by_q.at(qstar).numeric);
    rows.push_back(row);
  }
  return rows;
}

template <class B>
VerifyReport run_grid(long long p_max, const std::vector<long long>& r_list,
                      double tolerance) {
  VerifyReport report;
  report.tolerance = tolerance;
  report.exact = B::kExact;
  std::vector<long long> rs = r_list;
  std::sort(rs.begin(), rs.end());
  for (long long r : rs) validate_level(r);

  std::vector<std::pair<long long, long long>> blocks;
  for (long long r : rs)
    for (long long p = 2; p <= p_max; ++p) blocks.emplace_back(r, p);
  std::vector<std::vector<VerifyRow>> slots(blocks.size());
  std::atomic<size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(
      std::thread::hardware_concurrency(), blocks.size()));
  std::vector<std::thread> pool;
  std::mutex error_mutex;
  std::exception_ptr first_error;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < blocks.size();
           i = next.fetch_add(1)) {
        try {
          slots[i] = grid_block<B>(blocks[i].first, blocks[i].second);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  for (std::vector<VerifyRow>& slot : slots) {
    for (VerifyRow& row : slot) report.rows.push_back(row);
  }
  report.lens_count = 0;
  std::map<std::pair<long long, long long>, bool> seen;
  for (const VerifyRow& row : report.rows) {
    if (!seen.count({row.p, row.q})) {
      seen[{row.p, row.q}] = true;
      ++report.lens_count;
    }
    report.max_deviation = std::max(report.max_deviation, row.deviation);
    report.max_homeo_deviation =
        std::max(report.max_homeo_deviation, row.homeo_deviation);
    report.all_phi_ok = report.all_phi_ok && row.phi_ok;
    report.all_exact_equal = report.all_exact_equal && row.exact_equal;
  }
  report.pass = report.max_deviation <= tolerance &&
                report.max_homeo_deviation <= tolerance &&
                report.all_phi_ok &&
                (!B::kExact || report.all_exact_equal);
  return report;
}

}  // namespace

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << ": " << lens_count << " lens spaces, ";
  if (exact) {
    os << (all_exact_equal ? "exact canonical equality"
                           : "exact canonical MISMATCH");
    os << ", max numeric deviation ";
  } else {
    os << "max deviation ";
  }
  if (max_deviation <= tolerance) {
    os << "< " << tolerance;
  } else {
    os << "= " << max_deviation << " (tolerance " << tolerance << ")";
  }
  return os.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["lens_count"] = lens_count;
  j["max_deviation"] = max_deviation;
  j["max_homeo_deviation"] = max_homeo_deviation;
  j["all_phi_ok"] = all_phi_ok;
  j["exact"] = exact;
  if (exact) j["all_exact_equal"] = all_exact_equal;
  j["tolerance"] = tolerance;
  nlohmann::json rows = nlohmann::json::array();
  for (const VerifyRow& row : this->rows) {
    rows.push_back({{"r", row.r},
                    {"p", row.p},
                    {"q", row.q},
                    {"phi", row.phi},
                    {"re", row.value.real()},
                    {"im", row.value.imag()},
                    {"deviation", row.deviation},
                    {"phi_ok", row.phi_ok},
                    {"homeo_deviation", row.homeo_deviation},
                    {"exact_equal", row.exact_equal}});
  }
  j["rows"] = rows;
  return j.dump(2);
}

std::string VerifyReport::to_csv() const {
  std::ostringstream os;
  os << "r,p,q,re,im,phi,deviation\n";
  os.precision(17);
  for (const VerifyRow& row : rows) {
    os << row.r << ',' << row.p << ',' << row.q << ',' << row.value.real()
       << ',' << row.value.imag() << ',' << row.phi << ',' << row.deviation
       << '\n';
  }
  return os.str();
}

VerifyReport verify_grid(long long p_max, const std::vector<long long>& r_list,
                         BackendKind backend, double tolerance) {
  if (p_max < 2) throw DomainError("verify_grid: p_max must be >= 2");
  if (backend == BackendKind::kExact)
    return run_grid<ExactBackend>(p_max, r_list, tolerance);
  return run_grid<NumericBackend>(p_max, r_list, tolerance);
}

}  // namespace wrt
