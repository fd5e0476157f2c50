// Copyright 2026 The risdas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "risdas/channel_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "risdas/csv.hpp"
#include "risdas/errors.hpp"

namespace risdas {

namespace {

double field(std::string_view s, std::size_t line, const char* name) {
  auto v = csv::parse_double(s);
  if (!v) throw InputError("cannot parse " + std::string(name) + " value '" + std::string(s) + "'", line);
  return *v;
}

}  // namespace

ChannelRealization read_channel(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;

  // Header, skipping leading blank lines.
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line_no;
    auto fields = csv::split(text);
    if (fields.size() == 1 && fields[0].empty()) continue;
    std::string joined;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) joined += ',';
      joined += fields[i];
    }
    if (joined != kChannelHeader)
      throw InputError(std::string("expected header '") + kChannelHeader + "'", line_no);
    have_header = true;
    break;
  }
  if (!have_header) throw InputError("empty channel file: missing header");

  ChannelRealization ch;
  bool have_footer = false;
  while (std::getline(in, text)) {
    ++line_no;
    auto f = csv::split(text);
    if (f.size() == 1 && f[0].empty()) continue;
    if (have_footer) throw InputError("unexpected content after the hd footer row", line_no);
    if (f.size() != 5)
      throw InputError("expected 5 comma-separated fields, found " + std::to_string(f.size()), line_no);

    if (f[0] == "hd") {
      ch.h_d = {field(f[1], line_no, "hd_re"), field(f[2], line_no, "hd_im")};
      ch.noise_power = field(f[3], line_no, "noise_power");
      ch.tx_power = field(f[4], line_no, "tx_power");
      if (!(ch.noise_power > 0.0)) throw InputError("noise_power must be positive", line_no);
      if (!(ch.tx_power > 0.0)) throw InputError("tx_power must be positive", line_no);
      have_footer = true;
      continue;
    }

    auto idx = csv::parse_int(f[0]);
    if (!idx) throw InputError("expected element index or 'hd', found '" + std::string(f[0]) + "'", line_no);
    if (*idx != static_cast<long long>(ch.g.size()))
      throw InputError("element index " + std::to_string(*idx) + " out of sequence (expected " +
                           std::to_string(ch.g.size()) + ")",
                       line_no);
    ch.g.emplace_back(field(f[1], line_no, "g_re"), field(f[2], line_no, "g_im"));
    ch.h_r.emplace_back(field(f[3], line_no, "hr_re"), field(f[4], line_no, "hr_im"));
  }
  if (in.bad()) throw IoError("read error while parsing channel file");
  if (!have_footer)
    throw InputError("missing footer row 'hd,<re>,<im>,<noise_power>,<tx_power>'", line_no + 1);
  if (ch.g.empty()) throw InputError("channel file has no element rows", line_no);
  return ch;
}

void write_channel(std::ostream& out, const ChannelRealization& ch) {
  using csv::format_double;
  out << kChannelHeader << '\n';
  for (std::size_t i = 0; i < ch.g.size(); ++i) {
    out << i << ',' << format_double(ch.g[i].real()) << ',' << format_double(ch.g[i].imag()) << ','
        << format_double(ch.h_r[i].real()) << ',' << format_double(ch.h_r[i].imag()) << '\n';
  }
  out << "hd," << format_double(ch.h_d.real()) << ',' << format_double(ch.h_d.imag()) << ','
      << format_double(ch.noise_power) << ',' << format_double(ch.tx_power) << '\n';
}

ChannelRealization read_channel_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open channel file '" + path.string() + "'");
  return read_channel(in);
}

void write_channel_file(const std::filesystem::path& path, const ChannelRealization& ch) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_channel(out, ch);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace risdas
