// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include "hodge/bench.hpp"

namespace hodge
{

namespace
{

std::string Trim(std::string s)
{
  auto space = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), space));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), space).base(), s.end());
  return s;
}

std::vector<std::string> SplitList(const std::string &value)
{
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ','))
  {
    item = Trim(item);
    if (!item.empty())
    {
      out.push_back(item);
    }
  }
  return out;
}

template <typename T>
T Number(const std::string &s, int line)
{
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
  {
    throw std::invalid_argument("config: line " + std::to_string(line) + ": bad number '" + s +
                                "'");
  }
  return value;
}

bool Boolean(const std::string &s, int line)
{
  if (s == "true" || s == "1" || s == "yes" || s == "on")
  {
    return true;
  }
  if (s == "false" || s == "0" || s == "no" || s == "off")
  {
    return false;
  }
  throw std::invalid_argument("config: line " + std::to_string(line) + ": bad boolean '" + s +
                              "'");
}

}  // namespace

SweepConfig parse_config(std::istream &in)
{
  SweepConfig config;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw))
  {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
    {
      raw.erase(hash);
    }
    raw = Trim(raw);
    if (raw.empty())
    {
      continue;
    }
    const auto eq = raw.find('=');
    if (eq == std::string::npos)
    {
      throw std::invalid_argument("config: line " + std::to_string(line) +
                                  ": expected key = value");
    }
    const std::string key = Trim(raw.substr(0, eq));
    const std::string value = Trim(raw.substr(eq + 1));

    if (key == "dim")
    {
      config.dim = Number<int>(value, line);
    }
    else if (key == "k")
    {
      for (const auto &v : SplitList(value))
      {
        config.degrees.push_back(Number<int>(v, line));
      }
    }
    else if (key == "alpha")
    {
      for (const auto &v : SplitList(value))
      {
        config.alphas.push_back(Number<double>(v, line));
      }
    }
    else if (key == "levels")
    {
      for (const auto &v : SplitList(value))
      {
        config.levels.push_back({Number<int>(v, line), ""});
      }
    }
    else if (key == "mesh")
    {
      for (const auto &v : SplitList(value))
      {
        config.levels.push_back({0, v});
      }
    }
    else if (key == "tol")
    {
      config.tol = Number<double>(value, line);
    }
    else if (key == "maxiter")
    {
      config.maxiter = Number<int>(value, line);
    }
    else if (key == "format")
    {
      if (value == "csv")
      {
        config.format = TableFormat::Csv;
      }
      else if (value == "markdown")
      {
        config.format = TableFormat::Markdown;
      }
      else
      {
        throw std::invalid_argument("config: line " + std::to_string(line) +
                                    ": format must be csv or markdown");
      }
    }
    else if (key == "out")
    {
      config.out = value;
    }
    else if (key == "max-dof")
    {
      config.max_dof = Number<Index>(value, line);
    }
    else if (key == "timing")
    {
      config.timing = Boolean(value, line);
    }
    else
    {
      throw std::invalid_argument("config: line " + std::to_string(line) + ": unknown key '" +
                                  key + "'");
    }
  }
  return config;
}

}  // namespace hodge
