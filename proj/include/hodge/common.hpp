// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_COMMON_HPP
#define HODGE_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodge
{

using Index = std::int32_t;
using Vector = std::vector<double>;

// Input text could not be interpreted as a mesh.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// A matrix that must be symmetric positive definite produced a non-positive pivot.
class NotSpdError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// A dense computation was requested above the configured size cap.
class SizeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Geometric failure during assembly, e.g. a zero-volume cell.
class AssemblyError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Krylov recurrence broke down before the residual target was met.
class BreakdownError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hodge

#endif  // HODGE_COMMON_HPP
