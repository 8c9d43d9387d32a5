// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_BENCH_HPP
#define HODGE_BENCH_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>
#include "hodge/dense.hpp"
#include "hodge/mesh.hpp"

namespace hodge
{

// A structured refinement level (cells per axis) or a Gmsh file.
struct MeshLevel
{
  int cells_per_axis = 0;
  std::string path;

  std::string Label() const;
  bool operator==(const MeshLevel &) const = default;
};

enum class TableFormat
{
  Csv,
  Markdown
};

struct SweepConfig
{
  int dim = 2;
  std::vector<int> degrees;
  std::vector<double> alphas;
  std::vector<MeshLevel> levels;
  double tol = 1e-7;
  int maxiter = 200;
  TableFormat format = TableFormat::Csv;
  std::string out;
  Index max_dof = kDenseCap;
  bool timing = true;

  // Throws std::invalid_argument describing the first problem found.
  void Validate() const;
};

std::vector<double> default_alphas();
std::vector<MeshLevel> default_levels(int dim);
std::vector<MeshLevel> default_oracle_levels(int dim);

// Missing degrees, alphas and levels are replaced by their defaults.
SweepConfig with_defaults(SweepConfig config, bool oracle);

// Plain-text `key = value` lines; list keys may repeat or hold comma separated values.
// Keys: dim, k, alpha, levels, mesh, tol, maxiter, format, out, max-dof, timing.
SweepConfig parse_config(std::istream &in);

struct SweepRow
{
  int dim = 0;
  int k = 0;
  double alpha = 0.0;
  double h = 0.0;
  Index ndof_u = 0;
  Index ndof_p = 0;
  std::optional<int> iterations;  // empty when the tuple failed
  double final_relres = 0.0;
  double wall_time = 0.0;
  std::string error;

  bool Failed() const { return !iterations.has_value(); }
};

struct SweepResult
{
  std::vector<SweepRow> rows;

  bool AllSucceeded() const;
};

inline constexpr const char *kCsvHeader =
    "dim,k,alpha,h,ndof_u,ndof_p,iterations,final_relres,wall_time";

SimplicialMesh load_level(int dim, const MeshLevel &level);

// Threads used for independent tuples: HODGE_THREADS if set, else hardware concurrency.
int worker_threads();

// One row per (level, k, alpha), ordered level-major, then k, then alpha. A tuple that
// throws or does not converge is recorded as failed; the sweep continues.
SweepResult run_sweep(const SweepConfig &config);

// Throws std::invalid_argument on an empty result.
std::string emit_table(const SweepResult &result, TableFormat format);

// Inverse of emit_table(..., Csv); error messages are not preserved.
SweepResult parse_csv(std::istream &in);

// One line per (level, k, alpha) with the oracle constants and pass/fail flags, followed
// by a kappa robustness line per (level, k). Throws SizeError naming the first level above
// the dense cap; `all_pass` receives the conjunction of every flag.
std::string run_oracle_report(const SweepConfig &config, bool *all_pass = nullptr);

// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace hodge

#endif  // HODGE_BENCH_HPP
