#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "dtri/cfinite.hpp"
#include "dtri/durfee.hpp"
#include "dtri/error.hpp"
#include "dtri/partitions.hpp"
#include "dtri/qseries.hpp"

namespace dtri::cli {

namespace {

using Job = std::function<CheckResult()>;

CheckResult check(std::string name, bool hard, const std::function<bool(std::string&)>& body) {
  CheckResult r{std::move(name), hard, false, {}};
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

std::string first_mismatch(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return "first mismatch at index " + std::to_string(i);
  return a.size() == b.size() ? "" : "length mismatch";
}

void add_partition_jobs(std::vector<Job>& jobs) {
  jobs.emplace_back([] {
    return check("partition statistics, n <= 24", true, [](std::string& detail) {
      for (unsigned n = 0; n <= 24; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
          unsigned sq = durfee_square_size(p), tri = durfee_triangle_size(p);
          Partition c = conjugate(p);
          if (!(sq <= tri && tri <= 2 * sq) || conjugate(c) != p || durfee_square_size(c) != sq ||
              durfee_triangle_size(c) != tri || reconstruct(decompose_by_triangle(p)) != p) {
            std::ostringstream os;
            os << "fails at " << p;
            detail = os.str();
            return false;
          }
        }
      }
      return true;
    });
  });
  jobs.emplace_back([] {
    return check("sum_k R_k(n) = p(n), n <= 24", true, [](std::string& detail) {
      for (unsigned n = 1; n <= 24; ++n) {
        Integer total = 0;
        for (unsigned k = 1; triangular(k) <= n; ++k) total += series_expand(curly_fk_ratfn(k), n)[n];
        if (total != count_partitions_bruteforce(n)) {
          detail = "n = " + std::to_string(n);
          return false;
        }
      }
      return true;
    });
  });
}

void add_alpha_jobs(std::vector<Job>& jobs, unsigned d_max) {
  for (unsigned d = 1; d <= d_max; ++d) {
    jobs.emplace_back([d] {
      return check("alpha_" + std::to_string(d) + " structure", true, [d](std::string& detail) {
        AlphaReport r = check_alpha_structure(d);
        detail = "degree " + std::to_string(r.degree) + ", alpha(1) = " + r.value_at_1.get_str();
        return r.hard_checks_pass();
      });
    });
    jobs.emplace_back([d] {
      return check("A_" + std::to_string(d) + " three-way agreement to order 40", true, [d](std::string& detail) {
        PowerSeries dp = ad_series_dp(d, 40);
        PowerSeries via_alpha = series_expand(ad_ratfn(d), 40);
        RationalFunction rec = ad_ratfn_recursive(d);
        PowerSeries via_rec = series_expand(rec, 40);
        detail = first_mismatch(dp.coeffs(), via_alpha.coeffs()) + first_mismatch(dp.coeffs(), via_rec.coeffs());
        return dp == via_alpha && dp == via_rec && rec.num() == alpha_poly(d);
      });
    });
    if (d <= 6) {
      jobs.emplace_back([d] {
        return check("a_" + std::to_string(d) + "(n) vs enumeration, n <= 15; sandwich n <= 20", true,
                     [d](std::string& detail) {
                       PowerSeries dp = ad_series_dp(d, 20);
                       for (unsigned n = 0; n <= 20; ++n) {
                         if (n <= 15 && dp[n] != count_ad_bruteforce(d, n)) {
                           detail = "count mismatch at n = " + std::to_string(n);
                           return false;
                         }
                         if (dp[n] < count_pd_bruteforce(d, n) || dp[n] > count_pd_bruteforce(d, n + triangular(d))) {
                           detail = "sandwich fails at n = " + std::to_string(n);
                           return false;
                         }
                       }
                       return true;
                     });
      });
    }
    jobs.emplace_back([d] {
      return check("alpha_" + std::to_string(d) + "(-1) = (-1)^floor(d/2)", false, [d](std::string& detail) {
        AlphaReport r = check_alpha_structure(d);
        detail = "alpha(-1) = " + r.value_at_minus1.get_str();
        return r.minus1_conjecture;
      });
    });
    jobs.emplace_back([d] {
      return check("gcd(alpha_" + std::to_string(d) + ", (q;q)_d) = 1", false, [d](std::string& detail) {
        AlphaReport r = check_alpha_structure(d);
        detail = "gcd = " + to_string(r.gcd_with_pochhammer);
        return r.gcd_is_one;
      });
    });
  }
}

void add_phi_jobs(std::vector<Job>& jobs, unsigned k_max) {
  for (unsigned k = 1; k <= k_max; ++k) {
    const std::string ks = std::to_string(k);
    jobs.emplace_back([k, ks] {
      return check("phi_" + ks + " structure (degree, ends, phi(1) = 2^k, odd (1+q) factor)", true, [k](std::string& detail) {
        PhiReport r = check_phi_structure(k);
        detail = "degree " + std::to_string(r.degree) + ", phi(1) = " + r.value_at_1.get_str();
        return r.odd_factor_ok;
      });
    });
    jobs.emplace_back([k, ks] {
      return check("F_" + ks + " ratfn vs convolution, order 30", true, [k](std::string& detail) {
        PowerSeries a = series_expand(fk_ratfn(k), 30);
        PowerSeries b = fk_series_convolution(k, 30);
        PowerSeries c = series_expand(fk_ratfn(k, true), 30);
        detail = first_mismatch(a.coeffs(), b.coeffs());
        return a == b && a == c;
      });
    });
    if (k <= 6) {
      jobs.emplace_back([k, ks] {
        return check("R_" + ks + "(n) vs enumeration, n <= 30", true, [k](std::string& detail) {
          PowerSeries s = series_expand(curly_fk_ratfn(k), 30);
          for (unsigned n = 0; n <= 30; ++n)
            if (s[n] != count_rk_bruteforce(k, n)) {
              detail = "n = " + std::to_string(n);
              return false;
            }
          return true;
        });
      });
      jobs.emplace_back([k, ks] {
        return check("R_" + ks + " quasi-polynomial fit and leading coefficient", true, [k](std::string& detail) {
          QuasiPolynomial qp = fit_rk_quasipoly(k);
          const Rational lead = leading_asymptotic_rk(k);
          detail = "period " + std::to_string(qp.period());
          for (std::size_t nu = 0; nu < qp.period(); ++nu) {
            auto c = qp.coeffs_in_n(nu);
            if (c.size() != k || c.back() != lead) return false;
          }
          return true;
        });
      });
    }
    if (k <= 4) {
      jobs.emplace_back([k, ks] {
        return check("D_" + ks + "(n) vs enumeration, n <= 30", true, [k](std::string& detail) {
          PowerSeries s = series_expand(dk_ratfn(k), 30);
          for (unsigned n = 0; n <= 30; ++n)
            if (s[n] != count_dk_bruteforce(k, n)) {
              detail = "n = " + std::to_string(n);
              return false;
            }
          return true;
        });
      });
    }
    if (k <= 8) {
      jobs.emplace_back([k, ks] {
        return check("R_" + ks + " recurrence vs series through n = 200", true, [k](std::string& detail) {
          std::vector<Integer> ext = rk_sequence(k, 200);
          detail = first_mismatch(ext, series_expand(curly_fk_ratfn(k), 200).coeffs());
          return detail.empty();
        });
      });
    }
    jobs.emplace_back([k, ks] {
      return check("phi_" + ks + "(-1) = (-2)^(k/2) (even) or 0 (odd)", false, [k](std::string& detail) {
        PhiReport r = check_phi_structure(k);
        detail = "phi(-1) = " + r.value_at_minus1.get_str();
        return r.minus1_conjecture;
      });
    });
    jobs.emplace_back([k, ks] {
      return check("F_" + ks + " minimal denominator evidence", false, [k](std::string& detail) {
        PhiReport r = check_phi_structure(k);
        detail = "gcd(phi, (q;q)_k) = " + to_string(r.gcd_with_pochhammer);
        return r.minimal_denominator_evidence;
      });
    });
  }
  for (unsigned k = 2; k + 1 <= std::min(k_max, 11u); k += 2) {
    jobs.emplace_back([k] {
      const std::string name = "R_" + std::to_string(k) + ", R_" + std::to_string(k + 1) + " share their mod-2 period";
      return check(name, false, [k](std::string& detail) {
        std::size_t periods[2];
        for (unsigned i = 0; i < 2; ++i) {
          const unsigned kk = k + i;
          const std::size_t start = static_cast<std::size_t>(kk) * kk + 1;
          auto residues = rk_sequence_mod(kk, start + 12 * rk_quasi_period(kk), 2);
          periods[i] = eventual_period_residues(residues, start).period;
        }
        detail = std::to_string(periods[0]) + " vs " + std::to_string(periods[1]);
        return periods[0] == periods[1];
      });
    });
  }
}

}  // namespace

std::vector<CheckResult> verification_battery(unsigned k_max, unsigned d_max, unsigned jobs) {
  std::vector<Job> work;
  add_partition_jobs(work);
  add_alpha_jobs(work, d_max);
  add_phi_jobs(work, k_max);

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CheckResult> results(work.size());
  for (std::size_t begin = 0; begin < work.size(); begin += jobs) {
    const std::size_t end = std::min(work.size(), begin + jobs);
    std::vector<std::future<CheckResult>> batch;
    for (std::size_t i = begin; i < end; ++i) batch.push_back(std::async(std::launch::async, work[i]));
    for (std::size_t i = begin; i < end; ++i) results[i] = batch[i - begin].get();
  }
  return results;
}

}  // namespace dtri::cli
