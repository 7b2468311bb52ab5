// dhindex: index computations and verification sweeps for the
// Diffie-Hellman mappings on finite cyclic groups.
//
// Exit codes: 0 = all checks pass, 1 = a check failed (counterexample in
// the output), 2 = usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dhindex/cycmap.hpp"
#include "dhindex/dh.hpp"
#include "dhindex/ffpoly.hpp"
#include "dhindex/modarith.hpp"
#include "dhindex/report.hpp"
#include "dhindex/reportio.hpp"

namespace {

using namespace dhindex;

struct Range {
  u64 lo = 0;
  u64 hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoull(text);
    } else {
      r.lo = std::stoull(text.substr(0, pos));
      r.hi = std::stoull(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid range: " + text);
  }
  if (r.lo > r.hi) throw std::invalid_argument("invalid range: " + text);
  return r;
}

std::vector<u64> parse_u64_list(const std::string& text) {
  std::vector<u64> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid integer list: " + text);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// Streams rows in the requested format and tallies failures.
class Emitter {
 public:
  explicit Emitter(const std::string& format) : csv_(format == "csv") {
    if (csv_) std::cout << csv_header() << "\n";
  }

  void operator()(const ReportRow& row) {
    std::cout << (csv_ ? row_to_csv(row) : row_to_json(row)) << "\n";
    if (!row.pass) ++fails_;
  }

  int exit_code() const { return fails_ == 0 ? 0 : 1; }

 private:
  bool csv_ = false;
  u64 fails_ = 0;
};

json witness_to_json(const IndexWitness& w) {
  return {{"n", w.n},
          {"ell", w.ell},
          {"r", w.canonical_r()},
          {"mult", w.mult}};
}

json witness_to_json(const BiIndexWitness& w) {
  return {{"ell1", w.ell1},
          {"ell2", w.ell2},
          {"r1", w.canonical_r1()},
          {"r2", w.canonical_r2()},
          {"mult", w.mult}};
}

int cmd_index(const std::string& path) {
  Mapping mapping = load_mapping(path);
  if (std::holds_alternative<ExpMap>(mapping)) {
    const ExpMap& f = std::get<ExpMap>(mapping);
    std::cout << witness_to_json(compute_index(f)).dump() << "\n";
    return 0;
  }
  const BiExpMap& f = std::get<BiExpMap>(mapping);
  json pairs = json::array();
  for (auto [a, b] : minimal_index_pairs(f))
    pairs.push_back(witness_to_json(*bi_representable_at(f, a, b)));
  std::cout << json{{"n", f.n}, {"pairs", pairs}}.dump() << "\n";
  return 0;
}

json uni_report_json(const UniCoincidenceReport& rep) {
  json obj = {{"n", rep.n}, {"r", rep.r}, {"a", rep.a},
              {"count", rep.count}, {"points", rep.points}};
  obj["bound"] = rep.bound ? json(*rep.bound) : json(nullptr);
  obj["ratio"] = rep.ratio;
  return obj;
}

json bi_report_json(const BiCoincidenceReport& rep) {
  json points = json::array();
  for (auto [x, y] : rep.points) points.push_back(json::array({x, y}));
  return {{"n", rep.n},         {"r1", rep.r1},   {"r2", rep.r2},
          {"a", rep.a},         {"count", rep.count}, {"points", points},
          {"bound", rep.bound}};
}

json thm5_json(const Thm5Report& rep) {
  return {{"observed", rep.ell},
          {"bound_num", rep.bound.num},
          {"bound_den", rep.bound.den},
          {"pass", rep.pass},
          {"window", {{"N", rep.best_window.start},
                      {"H", rep.best_window.len},
                      {"s", rep.best_window.defect}}},
          {"fzero", {{"checked", rep.fzero_checked},
                     {"count", rep.fzero_count},
                     {"required", rep.fzero_required},
                     {"pass", rep.fzero_pass}}}};
}

json vandermonde_json(const VandermondeWitness& wit) {
  return {{"m", wit.m},
          {"v1_nodes_distinct", wit.v1_nodes_distinct},
          {"v1_invertible", wit.v1_invertible},
          {"v2_nodes_distinct", wit.v2_nodes_distinct},
          {"v2_invertible", wit.v2_invertible},
          {"g_nodes_distinct", wit.g_nodes_distinct},
          {"g_invertible", wit.g_invertible}};
}

// D as its own cyclotomic representation at index pair (n, n).
BiCyclotomicMap dh_bi_cyclotomic(u64 n) {
  BiCyclotomicMap m;
  m.n = n;
  m.ell1 = m.ell2 = n;
  m.r1 = m.r2 = 0;
  m.mult.assign(n, std::vector<u64>(n));
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) m.mult[x][y] = mul_mod(x, y, n);
  return m;
}

BiCyclotomicMap wrap_bi_expmap(const BiExpMap& f) {
  BiCyclotomicMap m;
  m.n = f.n;
  m.ell1 = m.ell2 = f.n;
  m.r1 = m.r2 = 0;
  m.mult = f.table;
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"index of the Diffie-Hellman mappings on cyclic groups"};
  app.require_subcommand(1);

  // index
  std::string map_path;
  CLI::App* sc_index = app.add_subcommand(
      "index", "compute the minimal index (pair) of a mapping file");
  sc_index->add_option("file", map_path, "mapping file (JSON)")->required();

  // verify
  std::string theorem;
  std::string range_opt;
  std::string format = "json";
  u64 n_max = 0, primes_up_to = 0, samples = 0, seed = 0, p_opt = 0;
  u64 composite_max = 0;
  CLI::App* sc_verify =
      app.add_subcommand("verify", "run a theorem verification sweep");
  sc_verify->add_option("theorem", theorem, "one of t1..t6")->required();
  sc_verify->add_option("--n", range_opt, "order or range LO..HI");
  sc_verify->add_option("--n-max", n_max, "largest order");
  sc_verify->add_option("--primes-up-to", primes_up_to, "largest prime order");
  sc_verify->add_option("--composite-max", composite_max,
                        "also report composite ratios up to this order");
  sc_verify->add_option("--samples", samples, "random samples per point");
  sc_verify->add_option("--seed", seed, "RNG seed");
  sc_verify->add_option("--p", p_opt, "field characteristic (t5)");
  sc_verify->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));

  // coincidences
  std::string variant;
  u64 co_n = 0, co_r = 0, co_a = 0, co_r1 = 0, co_r2 = 0;
  CLI::App* sc_co = app.add_subcommand(
      "coincidences", "count agreements with the Diffie-Hellman mapping");
  sc_co->add_option("variant", variant, "uni or bi")->required();
  sc_co->add_option("--n", co_n, "group order")->required();
  sc_co->add_option("--r", co_r, "exponent r (uni)");
  sc_co->add_option("--a", co_a, "translation exponent a");
  sc_co->add_option("--r1", co_r1, "exponent r1 (bi)");
  sc_co->add_option("--r2", co_r2, "exponent r2 (bi)");

  // ff
  std::string ff_op;
  std::string values_opt, u_opt, ff_map = "d";
  u64 ff_p = 0, ff_n = 0, ff_random = 0, ff_seed = 0, ff_m = 2;
  u64 ff_N = 0, ff_ell1 = 0, ff_ell2 = 0, ff_r1 = 0, ff_r2 = 0;
  CLI::App* sc_ff = app.add_subcommand(
      "ff", "prime-field polynomial machinery");
  sc_ff->add_option("op", ff_op, "interpolate|thm5|thm6|vandermonde")
      ->required();
  sc_ff->add_option("--p", ff_p, "field characteristic")->required();
  sc_ff->add_option("--n", ff_n, "subgroup order")->required();
  sc_ff->add_option("--values", values_opt, "comma-separated field elements");
  sc_ff->add_option("--map", ff_map, "d, D or a mapping file");
  sc_ff->add_option("--random", ff_random, "number of random instances");
  sc_ff->add_option("--seed", ff_seed, "RNG seed");
  sc_ff->add_option("--m", ff_m, "node count (vandermonde sweeps)");
  sc_ff->add_option("--u", u_opt, "comma-separated node exponents");
  sc_ff->add_option("--N0", ff_N, "window start exponent");
  sc_ff->add_option("--ell1", ff_ell1, "first index");
  sc_ff->add_option("--ell2", ff_ell2, "second index");
  sc_ff->add_option("--r1", ff_r1, "first order exponent");
  sc_ff->add_option("--r2", ff_r2, "second order exponent");
  sc_ff->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_index->parsed()) return cmd_index(map_path);

    if (sc_verify->parsed()) {
      Emitter emit(format);
      RowSink sink = [&emit](const ReportRow& row) { emit(row); };
      if (theorem == "t1") {
        if (range_opt.empty()) throw std::invalid_argument("t1: --n is required");
        Range r = parse_range(range_opt);
        if (r.lo < 1 || r.hi > 5000)
          throw std::invalid_argument("t1: supported range is 1..5000");
        verify_thm1(r.lo, r.hi, sink);
      } else if (theorem == "t2") {
        if (primes_up_to == 0)
          throw std::invalid_argument("t2: --primes-up-to is required");
        if (primes_up_to > 300 || composite_max > 200)
          throw std::invalid_argument("t2: supported sizes are primes <= 300, composites <= 200");
        verify_thm2(primes_up_to,
                    composite_max == 0 ? std::nullopt
                                       : std::optional<u64>(composite_max),
                    sink);
      } else if (theorem == "t3") {
        if (n_max == 0) throw std::invalid_argument("t3: --n-max is required");
        verify_thm3(n_max, sink);
      } else if (theorem == "t4") {
        if (n_max == 0 || samples == 0 || !sc_verify->count("--seed"))
          throw std::invalid_argument("t4: --n-max, --samples and --seed are required");
        verify_thm4(n_max, samples, seed, sink);
      } else if (theorem == "t5") {
        if (p_opt == 0 || range_opt.empty() || samples == 0 ||
            !sc_verify->count("--seed"))
          throw std::invalid_argument("t5: --p, --n, --samples and --seed are required");
        Range r = parse_range(range_opt);
        if (r.lo != r.hi) throw std::invalid_argument("t5: --n must be a single order");
        if (r.lo > 128 || samples > 100000)
          throw std::invalid_argument("t5: supported sizes are n <= 128, samples <= 1e5");
        verify_thm5(p_opt, r.lo, samples, seed, sink);
      } else if (theorem == "t6") {
        if (range_opt.empty() || samples == 0 || !sc_verify->count("--seed"))
          throw std::invalid_argument("t6: --n, --samples and --seed are required");
        Range r = parse_range(range_opt);
        if (r.hi > 40 || samples > 100000)
          throw std::invalid_argument("t6: supported sizes are n <= 40, samples <= 1e5");
        for (u64 n = r.lo; n <= r.hi; ++n) verify_thm6(n, samples, seed, sink);
      } else {
        throw std::invalid_argument("unknown theorem id: " + theorem);
      }
      return emit.exit_code();
    }

    if (sc_co->parsed()) {
      if (variant == "uni") {
        std::cout << uni_report_json(uni_coincidences(co_n, co_r, co_a)).dump()
                  << "\n";
      } else if (variant == "bi") {
        if (co_n > 100000)
          throw std::invalid_argument("coincidences bi: supported n <= 1e5");
        std::cout << bi_report_json(bi_coincidences(co_n, co_r1, co_r2, co_a)).dump()
                  << "\n";
      } else {
        throw std::invalid_argument("coincidences: variant must be uni or bi");
      }
      return 0;
    }

    if (sc_ff->parsed()) {
      if (ff_op == "interpolate") {
        PrimeFieldCtx ctx = make_ctx(ff_p, ff_n);
        if (values_opt.empty())
          throw std::invalid_argument("interpolate: --values is required");
        SparsePoly poly = interpolate_subgroup(ctx, parse_u64_list(values_opt));
        json terms = json::array();
        for (const auto& [d, c] : poly.terms)
          terms.push_back(json::array({d, c}));
        std::cout << terms.dump() << "\n";
        return 0;
      }
      if (ff_op == "thm5") {
        PrimeFieldCtx ctx = make_ctx(ff_p, ff_n);
        ExpMap f;
        if (ff_map == "d") {
          f = dh_uni(ff_n);
        } else {
          Mapping mapping = load_mapping(ff_map);
          if (!std::holds_alternative<ExpMap>(mapping))
            throw std::invalid_argument("thm5: mapping must be univariate");
          f = std::get<ExpMap>(mapping);
          if (f.n != ff_n)
            throw std::invalid_argument("thm5: mapping order must equal --n");
        }
        Thm5Report rep = thm5_check(f, ctx);
        std::cout << thm5_json(rep).dump() << "\n";
        return rep.pass ? 0 : 1;
      }
      if (ff_op == "thm6") {
        make_ctx(ff_p, ff_n);  // validates (p, n)
        if (ff_random > 0) {
          if (!sc_ff->count("--seed"))
            throw std::invalid_argument("thm6: --seed is required with --random");
          if (ff_n > 40 || ff_random > 100000)
            throw std::invalid_argument("thm6: supported sizes are n <= 40, random <= 1e5");
          Emitter emit(format);
          RowSink sink = [&emit](const ReportRow& row) { emit(row); };
          verify_thm6(ff_n, ff_random, ff_seed, sink);
          return emit.exit_code();
        }
        BiCyclotomicMap m;
        if (ff_map == "D" || ff_map == "d") {
          m = dh_bi_cyclotomic(ff_n);
        } else {
          Mapping mapping = load_mapping(ff_map);
          if (!std::holds_alternative<BiExpMap>(mapping))
            throw std::invalid_argument("thm6: mapping must be bivariate");
          const BiExpMap& f = std::get<BiExpMap>(mapping);
          if (f.n != ff_n)
            throw std::invalid_argument("thm6: mapping order must equal --n");
          m = wrap_bi_expmap(f);
        }
        Thm6Report rep = thm6_check(m, ff_n);
        json pairs = json::array();
        for (auto [a, b] : rep.minimal_pairs)
          pairs.push_back(json::array({a, b}));
        std::cout << json{{"observed", rep.observed},
                          {"bound", rep.bound},
                          {"minimal_pairs", pairs},
                          {"pass", rep.pass}}
                         .dump()
                  << "\n";
        return rep.pass ? 0 : 1;
      }
      if (ff_op == "vandermonde") {
        PrimeFieldCtx ctx = make_ctx(ff_p, ff_n);
        if (ff_random > 0) {
          if (!sc_ff->count("--seed"))
            throw std::invalid_argument("vandermonde: --seed is required with --random");
          if (ff_random > 100000)
            throw std::invalid_argument("vandermonde: random <= 1e5");
          Emitter emit(format);
          RowSink sink = [&emit](const ReportRow& row) { emit(row); };
          verify_vandermonde(ff_p, ff_n, ff_m, ff_random, ff_seed, sink);
          return emit.exit_code();
        }
        if (u_opt.empty())
          throw std::invalid_argument("vandermonde: --u is required");
        if (ff_ell1 == 0 || ff_ell2 == 0)
          throw std::invalid_argument("vandermonde: --ell1 and --ell2 are required");
        VandermondeWitness wit = vandermonde_witness(
            ctx, parse_u64_list(u_opt), ff_N, ff_ell1, ff_ell2, ff_r1, ff_r2);
        std::cout << vandermonde_json(wit).dump() << "\n";
        return 0;
      }
      throw std::invalid_argument("unknown ff op: " + ff_op);
    }
  } catch (const MappingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
