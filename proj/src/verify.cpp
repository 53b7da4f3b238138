#include "dyck/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "dyck/animals.hpp"
#include "dyck/asymptotics.hpp"
#include "dyck/bijections.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/path.hpp"
#include "dyck/sampler.hpp"

namespace dyck {

namespace {

struct Failure {
  std::string what;
};

// Runs `body`; a thrown Failure or exception becomes a FAIL with its message.
CheckResult check(std::string id, const std::function<std::string()>& body) {
  CheckResult r{std::move(id), false, {}};
  try {
    r.detail = body();
    r.passed = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string for_n(int n) { return " at n=" + std::to_string(n); }

bool rushed_by_culmination(const Path& p) {
  const int h = max_height(p);
  for (int k = 0; k < h; ++k)
    if (p[static_cast<std::size_t>(k)] != Step::Up) return false;
  Path rest = reverse_flip(p.slice(static_cast<std::size_t>(h), p.length()));
  return is_culminating(rest) && height_profile(rest).final_height() == h;
}

}  // namespace

std::vector<CheckResult> run_verification(int max_n) {
  std::vector<CheckResult> out;
  max_n = std::max(max_n, 0);

  // exhaustive pass shared by several checks
  std::vector<std::vector<Path>> dyck(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) dyck[static_cast<std::size_t>(n)] = enumerate_dyck(n);
  auto all = [&](int n) -> const std::vector<Path>& { return dyck[static_cast<std::size_t>(n)]; };
  auto rushed = [&](int n) {
    std::vector<Path> v;
    std::copy_if(all(n).begin(), all(n).end(), std::back_inserter(v), [](const Path& p) { return is_rushed(p); });
    return v;
  };
  auto progressive = [&](int n) {
    std::vector<Path> v;
    std::copy_if(all(n).begin(), all(n).end(), std::back_inserter(v), [](const Path& p) { return is_progressive(p); });
    return v;
  };
  const CountTable table = count_table(max_n);

  out.push_back(check("paths.catalan", [&] {
    for (int n = 0; n <= max_n; ++n) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), 2UL * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
      c /= n + 1;
      require(all(n).size() == c.get_ui(), "Dyck path count differs from Catalan number" + for_n(n));
    }
    return std::string("Dyck enumeration matches Catalan numbers");
  }));

  out.push_back(check("paths.rushed_culminating", [&] {
    for (int n = 0; n <= max_n; ++n)
      for (const Path& p : all(n))
        require(is_rushed(p) == rushed_by_culmination(p), "characterization fails for " + render_path(p));
    return std::string("rushed = up-run then right-to-left culminating");
  }));

  out.push_back(check("counts.equinumerous", [&] {
    for (int n = 0; n <= max_n; ++n)
      require(rushed(n).size() == progressive(n).size(), "rushed and progressive counts differ" + for_n(n));
    return std::string("exhaustive rushed and progressive counts agree");
  }));

  out.push_back(check("counts.threeway", [&] {
    const PowerSeries total = total_series(static_cast<std::size_t>(max_n));
    for (int n = 0; n <= max_n; ++n) {
      std::map<int, long> r, p;
      for (const Path& x : all(n)) {
        if (is_rushed(x)) ++r[max_height(x)];
        if (is_progressive(x)) ++p[max_height(x)];
      }
      long rs = 0;
      for (int h = 0; h <= n; ++h) {
        require(table.rushed(n, h) == r[h], "rushed count mismatch at (n,h)=(" + std::to_string(n) + "," + std::to_string(h) + ")");
        require(table.progressive(n, h) == p[h], "progressive count mismatch at (n,h)=(" + std::to_string(n) + "," + std::to_string(h) + ")");
        rs += r[h];
      }
      require(total[static_cast<std::size_t>(n)] == rs, "total series coefficient mismatch" + for_n(n));
    }
    return std::string("exhaustive = per-height series = total series");
  }));

  out.push_back(check("decomposition.reassembly", [&] {
    for (int n = 0; n <= max_n; ++n)
      for (const Path& p : all(n)) {
        require(assemble_dyck(decompose_f(p)) == p, "F decomposition does not reassemble " + render_path(p));
        if (!p.empty() && is_rushed(p))
          require(assemble_rushed(decompose_g(p)) == p, "G decomposition does not reassemble " + render_path(p));
      }
    return std::string("both decompositions reassemble exactly");
  }));

  out.push_back(check("bijection.f.roundtrip", [&] {
    for (int n = 0; n <= max_n; ++n)
      for (const Path& p : all(n)) {
        Path q = apply_f(p);
        require(q.length() == p.length() + static_cast<std::size_t>(max_height(p)) + 1, "F length wrong for " + render_path(p));
        require(max_height(q) == max_height(p) + 1, "F height wrong for " + render_path(p));
        require(invert_f(q) == p, "F^-1(F(p)) != p for " + render_path(p));
        require(apply_f(invert_f(q)) == q, "F(F^-1(q)) != q for " + render_path(q));
      }
    return std::string("F^-1 o F = id and F o F^-1 = id");
  }));

  out.push_back(check("bijection.f.image", [&] {
    for (int n = 0; n <= max_n; ++n) {
      std::map<int, std::vector<Path>> by_height;
      for (const Path& p : all(n)) by_height[max_height(p)].push_back(apply_f(p));
      for (auto& [h, image] : by_height) {
        std::sort(image.begin(), image.end());
        require(std::adjacent_find(image.begin(), image.end()) == image.end(), "F not injective" + for_n(n));
        require(image == enumerate_progressive_culminating(2 * n + h + 1, h + 1),
                "F image differs from progressive culminating set at (n,h)=(" + std::to_string(n) + "," + std::to_string(h) + ")");
      }
    }
    return std::string("F image = progressive culminating paths of length 2n+h+1, height h+1");
  }));

  out.push_back(check("bijection.g.roundtrip", [&] {
    for (int n = 0; n <= max_n; ++n) {
      for (const Path& p : rushed(n)) require(invert_g(apply_g(p)) == p, "G^-1(G(p)) != p for " + render_path(p));
      for (const Path& q : progressive(n)) require(apply_g(invert_g(q)) == q, "G(G^-1(q)) != q for " + render_path(q));
    }
    return std::string("G^-1 o G = id and G o G^-1 = id");
  }));

  out.push_back(check("bijection.g.image", [&] {
    for (int n = 0; n <= max_n; ++n) {
      std::vector<Path> image;
      for (const Path& p : rushed(n)) image.push_back(apply_g(p));
      std::sort(image.begin(), image.end());
      require(std::adjacent_find(image.begin(), image.end()) == image.end(), "G not injective" + for_n(n));
      require(image == progressive(n), "G image differs from the progressive set" + for_n(n));
    }
    return std::string("G image = progressive paths of the same length");
  }));

  out.push_back(check("bijection.g.height", [&] {
    for (int n = 1; n <= max_n; ++n)
      for (const Path& p : rushed(n)) {
        auto d = decompose_g(p);
        require(d.m <= d.j && d.j <= d.height - 1, "index bounds fail for " + render_path(p));
        require(max_height(apply_g(p)) == d.m + 1, "height of G(p) is not m+1 for " + render_path(p));
      }
    return std::string("h(G(p)) = m+1 and m <= j <= h-1");
  }));

  out.push_back(check("closed_form.trig", [&] {
    std::size_t checked = 0;
    for (int n = 3; n <= max_n; ++n)
      for (int h = 3; h <= n; ++h) {
        auto t = rushed_trig_count(n, h, 256);
        require(t.value == table.rushed(n, h - 1), "trig sum mismatch at (n,h)=(" + std::to_string(n) + "," + std::to_string(h) + ")");
        ++checked;
      }
    return "trig closed form matches table at " + std::to_string(checked) + " points (3 <= h <= n)";
  }));

  out.push_back(check("d.nonnegative", [&] {
    for (int n = 0; n <= std::min(max_n, 14); ++n) {
      auto dist = d_empirical(n, DMode::Exhaustive);
      require(dist.min_value() >= 0, "negative height drop" + for_n(n));
    }
    return std::string("h(p) - h(G(p)) >= 0 on every rushed path");
  }));

  out.push_back(check("sampler.tables", [&] {
    for (int n = 1; n <= max_n; ++n)
      require(SamplerTables(n).total() == table.rushed_total(n), "sampler total differs from table" + for_n(n));
    return std::string("walk-count tables agree with the series totals");
  }));

  out.push_back(check("animals.acute", [&] {
    for (int s = 1; s <= std::min(max_n, 9); ++s)
      require(table.progressive_total(s) == count_acute_half_animals(s),
              "acute half-animal count differs from progressive count at s=" + std::to_string(s));
    return std::string("acute half-animals equinumerous with progressive paths");
  }));

  return out;
}

}  // namespace dyck
