#include "vcldim/reductions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "vcldim/error.hpp"

namespace vcldim {
namespace {

__extension__ typedef unsigned __int128 u128;
constexpr u128 kU128Max = ~u128{0};
constexpr double kSlack = 1e-9;

std::optional<u128> mul(std::optional<u128> a, std::optional<u128> b) {
  if (!a || !b) return std::nullopt;
  if (*a != 0 && *b > kU128Max / *a) return std::nullopt;
  return *a * *b;
}

std::optional<u128> power(std::size_t base, std::size_t exp) {
  std::optional<u128> r = u128{1};
  for (std::size_t i = 0; i < exp && r; ++i) r = mul(r, u128{base});
  return r;
}

std::optional<u128> pow2(std::size_t exp) {
  if (exp >= 128) return std::nullopt;
  return u128{1} << exp;
}

double log2_of(std::size_t v) { return v == 0 ? -INFINITY : std::log2(static_cast<double>(v)); }

// base^exp >= 2^t, exactly when representable.
bool power_at_least_pow2(std::size_t base, std::size_t exp, std::size_t t) {
  const auto lhs = power(base, exp);
  const auto rhs = pow2(t);
  if (lhs && rhs) return *lhs >= *rhs;
  return static_cast<double>(exp) * log2_of(base) + kSlack >= static_cast<double>(t);
}

bool power_at_most_pow2(std::size_t base, std::size_t exp, std::size_t t) {
  const auto lhs = power(base, exp);
  const auto rhs = pow2(t);
  if (lhs && rhs) return *lhs <= *rhs;
  return static_cast<double>(exp) * log2_of(base) <= static_cast<double>(t) + kSlack;
}

std::optional<bool> when(bool have, bool value) { return have ? std::optional<bool>(value) : std::nullopt; }

std::size_t duplicate_count(std::vector<std::vector<std::size_t>> tuples) {
  std::sort(tuples.begin(), tuples.end());
  std::size_t dups = 0;
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    if (tuples[i] == tuples[i - 1]) ++dups;
  }
  return dups;
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

void add_lemma_params(ReductionCertificate& cert, const LemmaParams& p) {
  auto put = [&](const char* key, const std::optional<std::size_t>& v) {
    cert.add_param(key, v ? std::to_string(*v) : "unset");
  };
  put("q1", p.q1);
  put("q2", p.q2);
  put("t1", p.t1);
  put("t2", p.t2);
}

}  // namespace

std::optional<bool> ReductionCertificate::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c.satisfied;
  }
  return std::nullopt;
}

std::string serialize_certificate(const ReductionCertificate& cert) {
  std::ostringstream out;
  out << "reduction " << cert.reduction << '\n';
  for (const auto& [k, v] : cert.params) out << k << ' ' << v << '\n';
  for (const auto& c : cert.checks) {
    out << "check " << c.name << " : " << (!c.satisfied ? "unknown" : (*c.satisfied ? "satisfied" : "violated"))
        << '\n';
  }
  for (const auto& n : cert.notes) out << "note " << n << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

ConceptClass flip_reduction(const BipartiteGraph& g, RandomSource& rng) {
  ConceptClass c(g.n_a(), g.n_b());
  for (std::size_t a = 0; a < g.n_a(); ++a) {
    g.neighbors(a).for_each_set([&](std::size_t b) {
      if (rng.next_bit()) c.set_label(a, b, true);
    });
  }
  return c;
}

ReductionCertificate flip_certificate(const BipartiteGraph& g, const RandomSource& rng_at_start) {
  ReductionCertificate cert;
  cert.reduction = "flip";
  cert.add_param("seed", std::to_string(rng_at_start.seed()));
  cert.add_param("stream", std::to_string(rng_at_start.stream_index()));
  cert.add_param("points", std::to_string(g.n_a()));
  cert.add_param("concepts", std::to_string(g.n_b()));
  cert.add_param("bits_drawn", std::to_string(g.edge_count()));
  cert.notes.push_back("output graph is a subgraph of the input; K_{t,2^t}-freeness is inherited");
  return cert;
}

std::size_t trivial_embed_params(std::size_t d1) {
  if (d1 == 0) throw InvalidArgument("trivial embedding needs d1 >= 1");
  return static_cast<std::size_t>(std::bit_width(d1)) - 1;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> enumerate_tuples(std::size_t n, std::size_t len, TupleMode mode) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> cur(len, 0);
  while (true) {
    out.push_back(cur);
    // odometer increment from the right
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == n - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    const std::size_t fill = mode == TupleMode::kMultiset ? cur[i - 1] : 0;
    for (std::size_t k = i; k < len; ++k) cur[k] = fill;
  }
  return out;
}

std::optional<u128> tuple_count(std::size_t n, std::size_t len, TupleMode mode) {
  if (mode == TupleMode::kOrdered) return power(n, len);
  // C(n + len - 1, len), multiplicative form stays integral at every step
  if (n == 0) return u128{0};
  std::optional<u128> r = u128{1};
  for (std::size_t i = 1; i <= len && r; ++i) {
    r = mul(r, u128{n + i - 1});
    if (r) *r /= i;
  }
  return r;
}

}  // namespace

ProductResult one_sided_product(const BipartiteGraph& g, std::size_t ell_r, const LemmaParams& params, TupleMode mode,
                                std::size_t budget) {
  if (ell_r == 0) throw InvalidArgument("one-sided product needs l_R >= 1");
  const auto count = tuple_count(g.n_b(), ell_r, mode);
  const auto cells = mul(count, u128{std::max<std::size_t>(g.n_a(), 1)});
  if (!cells || *cells > budget) throw BudgetExceeded("one-sided product exceeds budget");

  ProductResult result;
  result.b_tuples = enumerate_tuples(g.n_b(), ell_r, mode);
  std::vector<BitRow> columns;
  columns.reserve(g.n_b());
  for (std::size_t b = 0; b < g.n_b(); ++b) columns.push_back(g.adjacency().column(b));

  result.graph = BipartiteGraph(g.n_a(), result.b_tuples.size());
  for (std::size_t j = 0; j < result.b_tuples.size(); ++j) {
    BitRow allowed(g.n_a(), true);
    for (std::size_t b : result.b_tuples[j]) allowed &= columns[b];
    allowed.for_each_set([&](std::size_t a) { result.graph.add_edge(a, j); });
  }

  auto& cert = result.certificate;
  cert.reduction = "one-sided-product";
  cert.add_param("l_R", std::to_string(ell_r));
  cert.add_param("tuple_mode", mode == TupleMode::kOrdered ? "ordered" : "multiset");
  cert.add_param("input_A", std::to_string(g.n_a()));
  cert.add_param("input_B", std::to_string(g.n_b()));
  cert.add_param("output_A", std::to_string(result.graph.n_a()));
  cert.add_param("output_B", std::to_string(result.graph.n_b()));
  add_lemma_params(cert, params);
  const bool c1 = params.q1 && params.t1;
  const bool c2 = params.q2 && params.t2;
  cert.checks.push_back({"q1 >= t1", when(c1, c1 && *params.q1 >= *params.t1)});
  cert.checks.push_back({"l_R*log2(q1) >= t1", when(c1, c1 && power_at_least_pow2(*params.q1, ell_r, *params.t1))});
  cert.checks.push_back({"q2 <= t2", when(c2, c2 && *params.q2 <= *params.t2)});
  cert.checks.push_back({"l_R*log2(q2) <= t2", when(c2, c2 && power_at_most_pow2(*params.q2, ell_r, *params.t2))});
  if (mode == TupleMode::kMultiset) {
    cert.notes.push_back("multiset vertices: a K_{q,q} yields only C(q+l_R-1,l_R) < q^l_R tuples for l_R > 1");
  }
  return result;
}

// ---------------------------------------------------------------------------

TupleSample sample_tuples(std::size_t n_a, std::size_t n_b, std::size_t n, std::size_t ell, RandomSource& rng) {
  if (n_a == 0 || n_b == 0) throw InvalidArgument("cannot sample tuples from an empty side");
  TupleSample s;
  auto draw = [&](std::size_t side, std::vector<std::vector<std::size_t>>& out) {
    out.assign(n, std::vector<std::size_t>(ell));
    for (auto& tuple : out) {
      for (auto& v : tuple) v = static_cast<std::size_t>(rng.uniform_below(side));
    }
  };
  draw(n_a, s.a_tuples);
  draw(n_b, s.b_tuples);
  return s;
}

BipartiteGraph product_from_tuples(const BipartiteGraph& g, const std::vector<std::vector<std::size_t>>& a_tuples,
                                   const std::vector<std::vector<std::size_t>>& b_tuples) {
  BipartiteGraph out(a_tuples.size(), b_tuples.size());
  for (std::size_t i = 0; i < a_tuples.size(); ++i) {
    BitRow common(g.n_b(), true);
    for (std::size_t a : a_tuples[i]) {
      if (a >= g.n_a()) throw InvalidArgument("tuple element out of range");
      common &= g.neighbors(a);
    }
    for (std::size_t j = 0; j < b_tuples.size(); ++j) {
      bool edge = true;
      for (std::size_t b : b_tuples[j]) {
        if (b >= g.n_b()) throw InvalidArgument("tuple element out of range");
        if (!common.test(b)) {
          edge = false;
          break;
        }
      }
      if (edge) out.add_edge(i, j);
    }
  }
  return out;
}

ProductResult two_sided_product(const BipartiteGraph& g, std::size_t n, std::size_t ell, RandomSource& rng,
                                const LemmaParams& params, std::size_t budget) {
  if (n == 0 || ell == 0) throw InvalidArgument("two-sided product needs n, l >= 1");
  const auto checks = mul(mul(u128{n}, u128{n}), u128{ell});
  if (!checks || *checks > budget) throw BudgetExceeded("two-sided product exceeds budget");

  const std::uint64_t seed = rng.seed();
  const std::uint64_t stream = rng.stream_index();
  TupleSample sample = sample_tuples(g.n_a(), g.n_b(), n, ell, rng);
  ProductResult result;
  result.graph = product_from_tuples(g, sample.a_tuples, sample.b_tuples);

  auto& cert = result.certificate;
  cert.reduction = "two-sided-product";
  cert.add_param("seed", std::to_string(seed));
  cert.add_param("stream", std::to_string(stream));
  cert.add_param("n", std::to_string(n));
  cert.add_param("l", std::to_string(ell));
  const std::size_t big_n = g.n_a();
  cert.add_param("N", std::to_string(big_n));
  add_lemma_params(cert, params);
  cert.add_param("delta", params.delta ? fmt_double(*params.delta) : "unset");
  cert.add_param("gamma", params.delta ? fmt_double(0.5 * *params.delta) : "unset");
  cert.add_param("duplicate_A_tuples", std::to_string(duplicate_count(sample.a_tuples)));
  cert.add_param("duplicate_B_tuples", std::to_string(duplicate_count(sample.b_tuples)));
  if (g.n_a() != g.n_b()) cert.notes.push_back("input sides differ in size; N taken as |A|");

  std::optional<bool> completeness_size;
  if (params.q1 && params.t1) {
    // n * q1^l >= 10 * 2^t1 * N^l
    const auto lhs = mul(u128{n}, power(*params.q1, ell));
    const auto rhs = mul(mul(u128{10}, pow2(*params.t1)), power(big_n, ell));
    if (lhs && rhs) {
      completeness_size = *lhs >= *rhs;
    } else {
      completeness_size = log2_of(n) + static_cast<double>(ell) * log2_of(*params.q1) + kSlack >=
                          std::log2(10.0) + static_cast<double>(*params.t1) + static_cast<double>(ell) * log2_of(big_n);
    }
  }
  cert.checks.push_back({"n >= 10*2^t1*(N/q1)^l", completeness_size});
  std::optional<bool> size_cap;
  if (params.delta) {
    size_cap = log2_of(n) <= std::log2(1000.0) + (1.0 - 0.5 * *params.delta) * static_cast<double>(ell) *
                                                     log2_of(big_n) + kSlack;
  }
  cert.checks.push_back({"n <= 1000*N^((1-0.5*delta)*l)", size_cap});
  cert.checks.push_back({"l >= 20", ell >= 20});
  std::optional<bool> spread;
  if (params.delta && params.t2 && params.q2) {
    spread = 0.005 * *params.delta * static_cast<double>(*params.t2) * static_cast<double>(ell) + kSlack >=
             static_cast<double>(*params.q2);
  }
  cert.checks.push_back({"0.005*delta*t2*l >= q2", spread});
  result.a_tuples = std::move(sample.a_tuples);
  result.b_tuples = std::move(sample.b_tuples);
  return result;
}

// ---------------------------------------------------------------------------

namespace {

class DisperserScan {
 public:
  DisperserScan(const std::vector<BitRow>& sets, double gamma, std::size_t ell, std::size_t max_m)
      : sets_(sets), gamma_(gamma), ell_(ell), max_m_(max_m) {}

  bool run(std::size_t universe) { return extend(0, 0, BitRow(universe)); }

 private:
  bool extend(std::size_t start, std::size_t size, const BitRow& acc) {
    if (size == max_m_) return true;
    for (std::size_t i = start; i < sets_.size(); ++i) {
      const BitRow next = acc | sets_[i];
      const double need = 0.01 * gamma_ * static_cast<double>(size + 1) * static_cast<double>(ell_);
      if (static_cast<double>(next.count()) + kSlack < need) return false;
      if (!extend(i + 1, size + 1, next)) return false;
    }
    return true;
  }

  const std::vector<BitRow>& sets_;
  double gamma_;
  std::size_t ell_;
  std::size_t max_m_;
};

}  // namespace

bool disperser_check(const std::vector<std::vector<std::size_t>>& sets, double gamma, std::size_t ell,
                     std::size_t max_m, std::size_t budget) {
  max_m = std::min(max_m, sets.size());
  // number of index subsets of size 1..max_m
  std::optional<u128> total = u128{0};
  std::optional<u128> binom = u128{1};
  for (std::size_t k = 1; k <= max_m && total; ++k) {
    binom = mul(binom, u128{sets.size() - k + 1});
    if (binom) *binom /= k;
    total = binom ? std::optional<u128>(*total + *binom) : std::nullopt;
  }
  if (!total || *total > budget) throw BudgetExceeded("disperser check exceeds budget");

  std::size_t universe = 0;
  for (const auto& s : sets) {
    for (std::size_t v : s) universe = std::max(universe, v + 1);
  }
  std::vector<BitRow> rows;
  rows.reserve(sets.size());
  for (const auto& s : sets) {
    BitRow r(universe);
    for (std::size_t v : s) r.set(v);
    rows.push_back(std::move(r));
  }
  return DisperserScan(rows, gamma, ell, max_m).run(universe);
}

// ---------------------------------------------------------------------------

UndirectedGraph sample_gnp(std::size_t n, Probability p, RandomSource& rng) {
  UndirectedGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

PlantedGraph sample_planted(std::size_t n, Probability p, std::size_t kappa, RandomSource& rng) {
  if (kappa > n) throw InvalidArgument("planted clique larger than the graph");
  PlantedGraph out{sample_gnp(n, p, rng), {}};
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) {
    std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform_below(i + 1))]);
  }
  out.planted.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(kappa));
  std::sort(out.planted.begin(), out.planted.end());
  for (std::size_t i = 0; i < kappa; ++i) {
    for (std::size_t j = i + 1; j < kappa; ++j) out.graph.add_edge(out.planted[i], out.planted[j]);
  }
  return out;
}

BipartiteGraph folklore_clique_to_biclique(const UndirectedGraph& g) {
  BipartiteGraph out(g.size(), g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    g.neighbors(u).for_each_set([&](std::size_t v) { out.add_edge(u, v); });
    out.add_edge(u, u);
  }
  return out;
}

Probability parse_probability(const std::string& text) {
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw InvalidArgument("bad probability '" + text + "'");
    }
    return v;
  };
  Probability p;
  const std::string_view s(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    p = {parse_u64(s.substr(0, slash)), parse_u64(s.substr(slash + 1))};
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto frac = s.substr(dot + 1);
    if (frac.size() > 18) throw InvalidArgument("too many decimals in '" + text + "'");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::uint64_t whole = dot == 0 ? 0 : parse_u64(s.substr(0, dot));
    p = {whole * den + (frac.empty() ? 0 : parse_u64(frac)), den};
  } else {
    p = {parse_u64(s), 1};
  }
  if (p.den == 0 || p.num > p.den) throw InvalidArgument("probability '" + text + "' outside [0,1]");
  const std::uint64_t g = std::gcd(p.num, p.den);
  if (g > 1) {
    p.num /= g;
    p.den /= g;
  }
  return p;
}

std::string format_probability(Probability p) { return std::to_string(p.num) + "/" + std::to_string(p.den); }

}  // namespace vcldim
