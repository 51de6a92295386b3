// Scene-query and benchmark front end.
//
//   cga eval <scene-file> --query "dist a b" [--query ...] [--eps v] [--json]
//   cga bench [--sig p,q] [--iters N]
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 geometric error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cga/scene.hpp"

namespace {

int run_eval(const std::string& scene_path, const std::vector<std::string>& queries,
             double eps, bool as_json) {
  std::ifstream in(scene_path);
  if (!in) {
    std::cerr << "cga: cannot open scene file '" << scene_path << "'\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  cga::Scene scene;
  try {
    scene = cga::parse_scene(buf.str());
  } catch (const cga::ParseError& e) {
    std::cerr << scene_path << ":" << e.line << ":" << e.col << ": [" << e.code
              << "] " << e.what() << "\n";
    return 2;
  }

  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const std::string& q : queries) {
    try {
      const cga::QueryResult r = cga::run_query(scene, q, eps);
      if (as_json) {
        results.push_back(r.data);
      } else {
        std::cout << r.text << "\n";
      }
    } catch (const cga::ParseError& e) {
      std::cerr << "query \"" << q << "\": [" << e.code << "] " << e.what() << "\n";
      return 2;
    } catch (const cga::GeomError& e) {
      std::cerr << "[E_GEOM] " << e.what() << "\n";
      return 3;
    }
  }
  if (as_json) std::cout << results.dump() << "\n";
  return 0;
}

// Reference product: per-pair sign recomputation instead of the prebuilt
// Cayley table.
cga::Multivector product_without_table(const cga::Multivector& a,
                                       const cga::Multivector& b) {
  const cga::Signature sig = a.signature();
  cga::Multivector out(sig);
  for (std::uint32_t i = 0; i < sig.blade_count(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < sig.blade_count(); ++j) {
      const auto [sign, mask] = cga::blade_product(i, j, sig);
      out[mask] += sign * a[i] * b[j];
    }
  }
  return out;
}

int run_bench(const cga::Signature& sig, long long iters, bool corrupt) {
  using clock = std::chrono::steady_clock;
  if (iters == 0) return 0;  // empty report

  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  constexpr int kPool = 64;
  std::vector<cga::Multivector> lhs, rhs;
  for (int k = 0; k < kPool; ++k) {
    cga::Multivector a(sig), b(sig);
    for (std::uint32_t i = 0; i < sig.blade_count(); ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
    }
    lhs.push_back(a);
    rhs.push_back(b);
  }

  // Correctness cross-check before timing anything.
  for (int k = 0; k < 16; ++k) {
    cga::Multivector fast = cga::geometric_product(lhs[k], rhs[k]);
    const cga::Multivector reference = product_without_table(lhs[k], rhs[k]);
    if (corrupt) fast[0] += 1.0;  // injected fault for the failure path
    const double err = (fast - reference).norm() /
                       std::max({fast.norm(), reference.norm(), 1.0});
    if (err > 1e-12) {
      std::cerr << "bench: product engine cross-check FAILED (relative error "
                << err << ") in G(" << sig.p << "," << sig.q << ")\n";
      return 3;
    }
  }

  const auto t0 = clock::now();
  double sink = 0.0;
  for (long long k = 0; k < iters; ++k) {
    const int slot = static_cast<int>(k & (kPool - 1));
    sink += cga::geometric_product(lhs[slot], rhs[slot])[0];
  }
  const double fast_secs = std::chrono::duration<double>(clock::now() - t0).count();

  const long long ref_iters = std::max(1000LL, iters / 100);
  const auto t1 = clock::now();
  for (long long k = 0; k < ref_iters; ++k) {
    const int slot = static_cast<int>(k & (kPool - 1));
    sink += product_without_table(lhs[slot], rhs[slot])[0];
  }
  const double ref_secs = std::chrono::duration<double>(clock::now() - t1).count();

  const double fast_rate = iters / fast_secs;
  const double ref_rate = ref_iters / ref_secs;
  std::printf(
      "bench G(%d,%d): iters=%lld fast=%.3e prod/s naive=%.3e prod/s "
      "speedup=%.2f check=ok (sink %.3g)\n",
      sig.p, sig.q, iters, fast_rate, ref_rate, fast_rate / ref_rate, sink);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal geometric-algebra scene queries"};
  app.require_subcommand(1);

  std::string scene_path;
  std::vector<std::string> queries;
  double eps = cga::kQueryEps;
  bool as_json = false;
  CLI::App* eval = app.add_subcommand("eval", "run queries against a scene file");
  eval->add_option("scene", scene_path, "scene file")->required();
  eval->add_option("--query", queries, "query string (repeatable)");
  eval->add_option("--eps", eps, "tolerance for collinear/coplanar/classification");
  eval->add_flag("--json", as_json, "machine-readable output");

  std::string sig_text;
  long long iters = 1000000;
  bool corrupt = false;
  CLI::App* bench = app.add_subcommand("bench", "time the multivector product engine");
  bench->add_option("--sig", sig_text, "signature p,q (default: both 3,1 and 4,1)");
  bench->add_option("--iters", iters, "number of products")
      ->check(CLI::NonNegativeNumber);
  bench->add_flag("--corrupt", corrupt, "inject a fault into the cross-check")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) {
      return run_eval(scene_path, queries, eps, as_json);
    }
    std::vector<cga::Signature> sigs;
    if (sig_text.empty()) {
      sigs = {cga::Signature::conformal(2), cga::Signature::conformal(3)};
    } else {
      int p = 0, q = 0;
      if (std::sscanf(sig_text.c_str(), "%d,%d", &p, &q) != 2) {
        std::cerr << "cga: --sig expects 'p,q'\n";
        return 1;
      }
      sigs = {cga::Signature::make(p, q)};
    }
    for (const cga::Signature& s : sigs) {
      const int rc = run_bench(s, iters, corrupt);
      if (rc != 0) return rc;
    }
    return 0;
  } catch (const cga::ParseError& e) {
    std::cerr << "[" << e.code << "] " << e.what() << "\n";
    return 2;
  } catch (const cga::Error& e) {
    std::cerr << "[E_GEOM] " << e.what() << "\n";
    return 3;
  }
}
