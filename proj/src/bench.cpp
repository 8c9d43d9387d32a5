// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>
#include "hodge/complex.hpp"
#include "hodge/minres.hpp"
#include "hodge/oracle.hpp"
#include "hodge/precond.hpp"
#include "hodge/system.hpp"

namespace hodge
{

namespace
{

std::string Scientific(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string AlphaLabel(double alpha)
{
  const double e = std::log10(alpha);
  if (std::abs(e - std::round(e)) < 1e-9)
  {
    return std::to_string(static_cast<long>(std::round(e)));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", e);
  return buf;
}

// Runs task(i) for i in [0, count) on up to `threads` workers.
template <typename Task>
void ParallelFor(std::size_t count, int threads, Task task)
{
  const auto nworkers = static_cast<std::size_t>(std::max(1, threads));
  if (nworkers == 1 || count <= 1)
  {
    for (std::size_t i = 0; i < count; ++i)
    {
      task(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(nworkers, count); ++w)
  {
    pool.emplace_back(
        [&]
        {
          for (std::size_t i = next++; i < count; i = next++)
          {
            task(i);
          }
        });
  }
  for (auto &t : pool)
  {
    t.join();
  }
}

std::vector<std::string> SplitCsv(const std::string &line)
{
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ','))
  {
    out.push_back(field);
  }
  if (!line.empty() && line.back() == ',')
  {
    out.emplace_back();
  }
  return out;
}

template <typename T>
T ParseNumber(const std::string &s, const char *what)
{
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
  {
    throw std::invalid_argument(std::string("parse_csv: bad ") + what + " '" + s + "'");
  }
  return value;
}

double ParseDouble(const std::string &s, const char *what)
{
  if (s == "nan")
  {
    return std::nan("");
  }
  if (s == "inf")
  {
    return std::numeric_limits<double>::infinity();
  }
  return ParseNumber<double>(s, what);
}

}  // namespace

std::string format_double(double x)
{
  if (std::isnan(x))
  {
    return "nan";
  }
  if (std::isinf(x))
  {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string MeshLevel::Label() const
{
  return path.empty() ? "m=" + std::to_string(cells_per_axis) : path;
}

std::vector<double> default_alphas()
{
  return {1e-4, 1e-2, 1.0, 1e2, 1e4};
}

std::vector<MeshLevel> default_levels(int dim)
{
  const std::vector<int> m = dim == 2 ? std::vector<int>{8, 16, 32, 64, 128}
                                      : std::vector<int>{3, 4, 6, 8, 11};
  std::vector<MeshLevel> out;
  for (int c : m)
  {
    out.push_back({c, ""});
  }
  return out;
}

std::vector<MeshLevel> default_oracle_levels(int dim)
{
  const std::vector<int> m = dim == 2 ? std::vector<int>{2, 4, 8, 16} : std::vector<int>{1, 2, 3, 4};
  std::vector<MeshLevel> out;
  for (int c : m)
  {
    out.push_back({c, ""});
  }
  return out;
}

SweepConfig with_defaults(SweepConfig config, bool oracle)
{
  if (config.degrees.empty())
  {
    for (int k = 1; k <= config.dim; ++k)
    {
      config.degrees.push_back(k);
    }
  }
  if (config.alphas.empty())
  {
    config.alphas = default_alphas();
  }
  if (config.levels.empty())
  {
    config.levels = oracle ? default_oracle_levels(config.dim) : default_levels(config.dim);
  }
  return config;
}

void SweepConfig::Validate() const
{
  if (dim != 2 && dim != 3)
  {
    throw std::invalid_argument("dim must be 2 or 3");
  }
  if (degrees.empty())
  {
    throw std::invalid_argument("at least one degree k is required");
  }
  for (int k : degrees)
  {
    if (k < 1 || k > dim)
    {
      throw std::invalid_argument("degree k = " + std::to_string(k) + " outside 1.." +
                                  std::to_string(dim));
    }
  }
  if (alphas.empty())
  {
    throw std::invalid_argument("at least one alpha is required");
  }
  for (double a : alphas)
  {
    if (!(a > 0.0) || !std::isfinite(a))
    {
      throw std::invalid_argument("alpha must be positive, got " + format_double(a));
    }
  }
  if (levels.empty())
  {
    throw std::invalid_argument("at least one mesh level is required");
  }
  for (const auto &l : levels)
  {
    if (l.path.empty() && l.cells_per_axis < 1)
    {
      throw std::invalid_argument("mesh level must have cells_per_axis >= 1");
    }
  }
  if (!(tol > 0.0))
  {
    throw std::invalid_argument("tol must be positive");
  }
  if (maxiter < 1)
  {
    throw std::invalid_argument("maxiter must be positive");
  }
  if (max_dof < 1)
  {
    throw std::invalid_argument("max-dof must be positive");
  }
}

bool SweepResult::AllSucceeded() const
{
  return std::none_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.Failed(); });
}

SimplicialMesh load_level(int dim, const MeshLevel &level)
{
  if (level.path.empty())
  {
    return build_structured_mesh(dim, level.cells_per_axis);
  }
  SimplicialMesh mesh = read_gmsh_file(level.path);
  if (mesh.Dim() != dim)
  {
    throw std::invalid_argument(level.path + ": mesh dimension " + std::to_string(mesh.Dim()) +
                                " does not match dim " + std::to_string(dim));
  }
  return mesh;
}

int worker_threads()
{
  if (const char *env = std::getenv("HODGE_THREADS"))
  {
    const int n = std::atoi(env);
    if (n >= 1)
    {
      return n;
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const SweepConfig &config)
{
  config.Validate();
  SweepResult result;
  const int threads = worker_threads();
  for (const auto &level : config.levels)
  {
    const auto complex = std::make_shared<const DeRhamComplex>(load_level(config.dim, level));
    const double h = mesh_size(complex->Mesh());
    const std::size_t first = result.rows.size();
    for (int k : config.degrees)
    {
      for (double alpha : config.alphas)
      {
        SweepRow row;
        row.dim = config.dim;
        row.k = k;
        row.alpha = alpha;
        row.h = h;
        row.ndof_u = complex->Size(k);
        row.ndof_p = complex->Size(k - 1);
        result.rows.push_back(row);
      }
    }
    ParallelFor(result.rows.size() - first, threads,
                [&](std::size_t i)
                {
                  SweepRow &row = result.rows[first + i];
                  const auto start = std::chrono::steady_clock::now();
                  try
                  {
                    SaddleSystem system = assemble_system(*complex, row.k, row.alpha);
                    std::tie(system.F, system.G) =
                        assemble_rhs(*complex, row.k, LoadSpec::Psi(), LoadSpec::Psi());
                    const BlockPreconditioner pre(*complex, row.k, row.alpha);
                    const auto [x, report] =
                        minres_solve(system, pre, config.tol, config.maxiter);
                    row.final_relres = report.final_relres;
                    if (report.converged)
                    {
                      row.iterations = report.iterations;
                    }
                    else
                    {
                      row.error = "not converged after " + std::to_string(report.iterations) +
                                  " iterations";
                    }
                  }
                  catch (const std::exception &e)
                  {
                    row.final_relres = std::nan("");
                    row.error = e.what();
                  }
                  const std::chrono::duration<double> elapsed =
                      std::chrono::steady_clock::now() - start;
                  row.wall_time = config.timing ? elapsed.count() : 0.0;
                });
  }
  return result;
}

std::string emit_table(const SweepResult &result, TableFormat format)
{
  if (result.rows.empty())
  {
    throw std::invalid_argument("emit_table: empty result");
  }
  std::ostringstream os;
  if (format == TableFormat::Csv)
  {
    os << kCsvHeader << '\n';
    for (const auto &r : result.rows)
    {
      os << r.dim << ',' << r.k << ',' << format_double(r.alpha) << ',' << format_double(r.h)
         << ',' << r.ndof_u << ',' << r.ndof_p << ','
         << (r.iterations ? std::to_string(*r.iterations) : std::string("failed")) << ','
         << format_double(r.final_relres) << ',' << format_double(r.wall_time) << '\n';
    }
    return os.str();
  }

  // Markdown: one h-by-log10(alpha) grid per (dim, k), rows in first-seen order.
  std::vector<std::pair<int, int>> groups;
  std::vector<double> alphas;
  for (const auto &r : result.rows)
  {
    if (std::find(groups.begin(), groups.end(), std::pair{r.dim, r.k}) == groups.end())
    {
      groups.emplace_back(r.dim, r.k);
    }
    if (std::find(alphas.begin(), alphas.end(), r.alpha) == alphas.end())
    {
      alphas.push_back(r.alpha);
    }
  }
  for (std::size_t g = 0; g < groups.size(); ++g)
  {
    const auto [dim, k] = groups[g];
    if (g > 0)
    {
      os << '\n';
    }
    os << "### dim = " << dim << ", k = " << k << "\n\n";
    os << "| h \\ log10(alpha) |";
    for (double a : alphas)
    {
      os << ' ' << AlphaLabel(a) << " |";
    }
    os << "\n|---|";
    for (std::size_t i = 0; i < alphas.size(); ++i)
    {
      os << "---:|";
    }
    os << '\n';
    std::vector<double> hs;
    for (const auto &r : result.rows)
    {
      if (r.dim == dim && r.k == k && std::find(hs.begin(), hs.end(), r.h) == hs.end())
      {
        hs.push_back(r.h);
      }
    }
    for (double h : hs)
    {
      os << "| " << Scientific(h) << " |";
      for (double a : alphas)
      {
        std::string cell = " ";
        for (const auto &r : result.rows)
        {
          if (r.dim == dim && r.k == k && r.h == h && r.alpha == a)
          {
            cell = r.iterations ? std::to_string(*r.iterations) : "fail";
          }
        }
        os << ' ' << cell << " |";
      }
      os << '\n';
    }
  }
  return os.str();
}

SweepResult parse_csv(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
  {
    throw std::invalid_argument("parse_csv: missing or unexpected header");
  }
  SweepResult result;
  while (std::getline(in, line))
  {
    if (line.empty())
    {
      continue;
    }
    const auto f = SplitCsv(line);
    if (f.size() != 9)
    {
      throw std::invalid_argument("parse_csv: expected 9 fields in '" + line + "'");
    }
    SweepRow r;
    r.dim = ParseNumber<int>(f[0], "dim");
    r.k = ParseNumber<int>(f[1], "k");
    r.alpha = ParseDouble(f[2], "alpha");
    r.h = ParseDouble(f[3], "h");
    r.ndof_u = ParseNumber<Index>(f[4], "ndof_u");
    r.ndof_p = ParseNumber<Index>(f[5], "ndof_p");
    if (f[6] == "failed")
    {
      r.error = "failed";
    }
    else
    {
      r.iterations = ParseNumber<int>(f[6], "iterations");
    }
    r.final_relres = ParseDouble(f[7], "final_relres");
    r.wall_time = ParseDouble(f[8], "wall_time");
    result.rows.push_back(std::move(r));
  }
  return result;
}

std::string run_oracle_report(const SweepConfig &config, bool *all_pass)
{
  config.Validate();
  struct Level
  {
    std::shared_ptr<const DeRhamComplex> complex;
    double h;
  };
  std::vector<Level> levels;
  for (const auto &level : config.levels)
  {
    auto complex = std::make_shared<const DeRhamComplex>(load_level(config.dim, level));
    for (int k : config.degrees)
    {
      const Index ndof = complex->Size(k) + complex->Size(k - 1);
      if (ndof > config.max_dof)
      {
        throw SizeError("oracle: level " + level.Label() + " has " + std::to_string(ndof) +
                        " degrees of freedom at k = " + std::to_string(k) +
                        ", above max-dof " + std::to_string(config.max_dof));
      }
    }
    levels.push_back({complex, mesh_size(complex->Mesh())});
  }

  std::ostringstream os;
  os << "dim,k,alpha,h,ndof,beta,beta_flipped,kappa,equiv_low,equiv_high,c_km1,c_k,"
        "inf_sup,equivalence,flipped,flipped_q\n";
  std::ostringstream summary;
  bool pass = true;
  auto flag = [&pass](bool ok)
  {
    pass = pass && ok;
    return ok ? "pass" : "fail";
  };
  for (const auto &[complex, h] : levels)
  {
    std::map<int, double> poincare;
    for (int j = 0; j < config.dim; ++j)
    {
      poincare[j] = poincare_constant(*complex, j, config.max_dof);
    }
    for (int k : config.degrees)
    {
      const DenseBlocks blocks(*complex, k, config.max_dof);
      std::vector<SpectralReport> reports(config.alphas.size());
      ParallelFor(config.alphas.size(), worker_threads(),
                  [&](std::size_t i)
                  { reports[i] = spectral_report(*complex, blocks, config.alphas[i], poincare); });
      double kmin = std::numeric_limits<double>::infinity(), kmax = 0.0;
      for (const auto &r : reports)
      {
        os << config.dim << ',' << k << ',' << format_double(r.alpha) << ',' << format_double(h)
           << ',' << complex->Size(k) + complex->Size(k - 1) << ',' << format_double(r.beta)
           << ',' << format_double(r.beta_flipped) << ',' << format_double(r.kappa) << ','
           << format_double(r.equivalence_low) << ',' << format_double(r.equivalence_high)
           << ',' << format_double(r.poincare.at(k - 1)) << ','
           << format_double(r.poincare.at(k)) << ',' << flag(r.InfSupHolds()) << ','
           << flag(r.EquivalenceHolds()) << ',' << flag(r.FlippedHolds()) << ','
           << flag(r.FlippedNormMatches()) << '\n';
        kmin = std::min(kmin, r.kappa);
        kmax = std::max(kmax, r.kappa);
      }
      const bool robust = std::isfinite(kmax) && kmax / kmin <= 1.5;
      summary << "# kappa_ratio dim=" << config.dim << " k=" << k << " h=" << format_double(h)
              << " ratio=" << format_double(kmax / kmin) << ' ' << flag(robust) << '\n';
    }
  }
  os << summary.str();
  if (all_pass)
  {
    *all_pass = pass;
  }
  return os.str();
}

}  // namespace hodge
