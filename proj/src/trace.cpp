// Copyright 2026 The Loschmidt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "loschmidt/trace.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "loschmidt/error.hpp"

namespace loschmidt {

void TimeGrid::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end)) {
    throw Error("ed_engine", "time grid needs finite t_start < t_end");
  }
  if (n_points < 2) throw Error("ed_engine", "time grid needs at least 2 points");
}

std::vector<double> TimeGrid::times() const {
  validate();
  std::vector<double> t(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) t[static_cast<std::size_t>(i)] = at(i);
  return t;
}

double rate_value(double echo, double size_L) {
  if (echo <= 0.0) return std::numeric_limits<double>::infinity();
  return echo >= 1.0 ? 0.0 : -std::log(echo) / size_L;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_trace_csv(std::ostream& out, const LoschmidtTrace& trace) {
  out << "t,echo,rate\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << format_number(trace.times[i]) << ',' << format_number(trace.echo[i]) << ','
        << format_number(trace.rate[i]) << '\n';
  }
}

namespace {
void write_array(std::ostream& out, const std::vector<double>& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    if (std::isinf(v[i])) {
      out << "\"inf\"";
    } else {
      out << format_number(v[i]);
    }
  }
  out << ']';
}
}  // namespace

void write_trace_json(std::ostream& out, const LoschmidtTrace& trace) {
  out << "{\"t\":";
  write_array(out, trace.times);
  out << ",\"echo\":";
  write_array(out, trace.echo);
  out << ",\"rate\":";
  write_array(out, trace.rate);
  out << ",\"size_L\":" << format_number(trace.size_L) << "}\n";
}

}  // namespace loschmidt
