#include "knotqubit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace knotqubit::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line,
                             const std::string& message) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + message);
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' '))
    s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  return s.substr(start);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(trimmed(cur));
  return fields;
}

double parse_number(const std::filesystem::path& path, std::size_t line_no,
                    const std::string& field) {
  try {
    std::size_t consumed = 0;
    const double v = std::stod(field, &consumed);
    if (consumed != field.size()) parse_fail(path, line_no, "trailing junk in number '" + field + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(path, line_no, "expected a number, got '" + field + "'");
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ":0: cannot open file");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ":0: cannot open file for writing");
  return out;
}

void expect_header(const std::filesystem::path& path, std::ifstream& in,
                   const std::string& expected) {
  std::string line;
  if (!std::getline(in, line)) parse_fail(path, 1, "missing header row");
  if (trimmed(line) != expected)
    parse_fail(path, 1, "expected header '" + expected + "', got '" + trimmed(line) + "'");
}

json potential_to_json_obj(const PotentialProfile& p) {
  json j;
  j["representation"] = p.representation == PotentialRep::PiecewiseConstant
                            ? "piecewise-constant"
                            : "piecewise-linear";
  j["breakpoints"] = p.breakpoints;
  j["values"] = p.values;
  j["boundary"] = p.boundary == BoundaryKind::HardWall ? "hard-wall" : "open";
  j["domain"] = {p.domain_min, p.domain_max};
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SpaceCurve read_curve_csv(const std::filesystem::path& path, bool closed) {
  auto in = open_input(path);
  expect_header(path, in, "x,y,z");
  SpaceCurve curve;
  curve.closed = closed;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) parse_fail(path, line_no, "expected 3 fields");
    curve.points.push_back({parse_number(path, line_no, fields[0]),
                            parse_number(path, line_no, fields[1]),
                            parse_number(path, line_no, fields[2])});
  }
  curve.validate();
  return curve;
}

void write_curve_csv(const std::filesystem::path& path, const SpaceCurve& curve) {
  auto out = open_output(path);
  out << "x,y,z\n";
  for (const auto& p : curve.points)
    out << format_double(p.x) << ',' << format_double(p.y) << ','
        << format_double(p.z) << '\n';
}

CurvatureProfile read_profile_csv(const std::filesystem::path& path, bool closed,
                                  double period) {
  auto in = open_input(path);
  expect_header(path, in, "s,kappa");
  CurvatureProfile profile;
  profile.closed = closed;
  profile.period = period;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2) parse_fail(path, line_no, "expected 2 fields");
    const double s = parse_number(path, line_no, fields[0]);
    const double kappa = parse_number(path, line_no, fields[1]);
    if (!profile.s.empty() && s <= profile.s.back())
      parse_fail(path, line_no, "arclength s must be strictly increasing");
    if (kappa < 0.0) parse_fail(path, line_no, "kappa must be >= 0");
    profile.s.push_back(s);
    profile.kappa.push_back(kappa);
  }
  profile.validate();
  return profile;
}

void write_profile_csv(const std::filesystem::path& path, const CurvatureProfile& profile) {
  auto out = open_output(path);
  out << "s,kappa\n";
  for (std::size_t i = 0; i < profile.s.size(); ++i)
    out << format_double(profile.s[i]) << ',' << format_double(profile.kappa[i]) << '\n';
}

std::vector<PiecewiseSegment> read_segments_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  expect_header(path, in, "kind,length,radius");
  std::vector<PiecewiseSegment> segments;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3 && fields.size() != 2)
      parse_fail(path, line_no, "expected 'kind,length,radius'");
    const std::string kind = fields[0];
    const double length = parse_number(path, line_no, fields[1]);
    if (kind == "straight") {
      segments.push_back(PiecewiseSegment::straight(length));
    } else if (kind == "arc") {
      if (fields.size() != 3 || fields[2].empty())
        parse_fail(path, line_no, "arc segments need a radius");
      segments.push_back(
          PiecewiseSegment::arc(length, parse_number(path, line_no, fields[2])));
    } else {
      parse_fail(path, line_no, "kind must be 'straight' or 'arc', got '" + kind + "'");
    }
  }
  if (segments.empty()) parse_fail(path, line_no, "no segments in file");
  return segments;
}

void write_potential_csv(const std::filesystem::path& path, const PotentialProfile& p) {
  const auto linear = p.to_piecewise_linear();
  auto out = open_output(path);
  out << "s,V\n";
  for (std::size_t i = 0; i < linear.breakpoints.size(); ++i)
    out << format_double(linear.breakpoints[i]) << ','
        << format_double(linear.values[i]) << '\n';
}

PotentialProfile read_potential_json(const std::filesystem::path& path) {
  auto in = open_input(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ":0: " + e.what());
  }
  PotentialProfile p;
  try {
    const std::string rep = j.at("representation").get<std::string>();
    if (rep == "piecewise-constant") {
      p.representation = PotentialRep::PiecewiseConstant;
    } else if (rep == "piecewise-linear") {
      p.representation = PotentialRep::PiecewiseLinear;
    } else {
      throw ParseError(path.string() + ":0: unknown representation '" + rep + "'");
    }
    p.breakpoints = j.at("breakpoints").get<std::vector<double>>();
    p.values = j.at("values").get<std::vector<double>>();
    const std::string boundary = j.value("boundary", "open");
    if (boundary == "hard-wall") {
      p.boundary = BoundaryKind::HardWall;
    } else if (boundary == "open") {
      p.boundary = BoundaryKind::Open;
    } else {
      throw ParseError(path.string() + ":0: unknown boundary '" + boundary + "'");
    }
    if (j.contains("domain")) {
      p.domain_min = j["domain"].at(0).get<double>();
      p.domain_max = j["domain"].at(1).get<double>();
    } else {
      p.domain_min = p.breakpoints.front();
      p.domain_max = p.breakpoints.back();
    }
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ":0: " + e.what());
  }
  p.validate();
  return p;
}

void write_potential_json(const std::filesystem::path& path, const PotentialProfile& p) {
  auto out = open_output(path);
  out << potential_to_json_obj(p).dump(2) << '\n';
}

std::string spectrum_to_json(const std::vector<BoundState>& states) {
  json j = json::array();
  for (const auto& st : states) {
    json entry;
    entry["k"] = st.k;
    entry["q"] = st.q;
    entry["energy"] = st.energy;
    entry["parity"] = to_string(st.parity);
    if (st.at_threshold) entry["at_threshold"] = true;
    j.push_back(entry);
  }
  return j.dump(2);
}

void write_spectrum_json(const std::filesystem::path& path,
                         const std::vector<BoundState>& states) {
  auto out = open_output(path);
  out << spectrum_to_json(states) << '\n';
}

void write_wavefunction_csv(const std::filesystem::path& path, const Grid& grid,
                            const std::vector<double>& psi) {
  auto out = open_output(path);
  out << "s,psi\n";
  for (std::size_t i = 0; i < psi.size(); ++i)
    out << format_double(grid.node(i)) << ',' << format_double(psi[i]) << '\n';
}

std::string split_to_json(const SplitResult& r) {
  json j;
  j["deltaE"] = r.deltaE;
  j["omega_cl"] = r.omega_cl;
  j["omega_res"] = r.omega_res;
  j["method"] = to_string(r.method);
  return j.dump(2);
}

void write_split_json(const std::filesystem::path& path, const SplitResult& r) {
  auto out = open_output(path);
  out << split_to_json(r) << '\n';
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<TransmissionPoint>& sweep) {
  auto out = open_output(path);
  out << "q,T\n";
  for (const auto& pt : sweep)
    out << format_double(pt.q) << ',' << format_double(pt.T) << '\n';
}

void write_resonances_json(const std::filesystem::path& path,
                           const std::vector<double>& resonances) {
  auto out = open_output(path);
  out << json(resonances).dump(2) << '\n';
}

void write_wavepacket_csv(const std::filesystem::path& path,
                          const std::vector<WavepacketSample>& samples) {
  auto out = open_output(path);
  out << "t,P_L,P_R,norm\n";
  for (const auto& s : samples)
    out << format_double(s.t) << ',' << format_double(s.p_left) << ','
        << format_double(s.p_right) << ',' << format_double(s.norm) << '\n';
}

void write_tls_csv(const std::filesystem::path& path,
                   const std::vector<TlsSample>& samples) {
  auto out = open_output(path);
  out << "t,reP_aL,imP_aL,reP_aR,imP_aR\n";
  for (const auto& s : samples)
    out << format_double(s.t) << ',' << format_double(s.state.aL.real()) << ','
        << format_double(s.state.aL.imag()) << ',' << format_double(s.state.aR.real())
        << ',' << format_double(s.state.aR.imag()) << '\n';
}

}  // namespace knotqubit::io
