#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sindy/errors.hpp"
#include "sindy/trajectory.hpp"

namespace sindy {

namespace detail {

inline std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

inline double parse_double(const std::string& s, int line_no,
                           const char* what) {
  double value = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw parse_error("line " + std::to_string(line_no) + ": bad " + what +
                      " '" + s + "'");
  return value;
}

inline int parse_int(const std::string& s, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw parse_error("line " + std::to_string(line_no) + ": bad " + what +
                      " '" + s + "'");
  return value;
}

}  // namespace detail

// Schema: ball_id,drop_id,time_s,height_m with a required header row.
// One Trajectory per (ball_id, drop_id) group, in order of first appearance.
inline std::vector<Trajectory> load_trajectories(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty CSV source");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "ball_id,drop_id,time_s,height_m")
    throw parse_error("line 1: expected header 'ball_id,drop_id,time_s,height_m'");

  std::vector<Trajectory> groups;
  std::map<std::pair<std::string, int>, std::size_t> index;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = detail::split_csv_row(line);
    if (fields.size() != 4)
      throw parse_error("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                        std::to_string(fields.size()));
    const std::string& ball = fields[0];
    const int drop = detail::parse_int(fields[1], line_no, "drop_id");
    const double t = detail::parse_double(fields[2], line_no, "time_s");
    const double h = detail::parse_double(fields[3], line_no, "height_m");

    auto key = std::make_pair(ball, drop);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, groups.size());
      groups.push_back(Trajectory{{}, {}, ball, drop});
      it = index.find(key);
    }
    groups[it->second].times.push_back(t);
    groups[it->second].heights.push_back(h);
  }
  if (groups.empty()) throw validation_error("CSV contains no data rows");
  for (const auto& traj : groups) validate(traj);
  return groups;
}

inline std::vector<Trajectory> load_trajectories(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_trajectories(in);
}

inline void write_trajectories(std::ostream& out,
                               const std::vector<Trajectory>& trajs) {
  out << "ball_id,drop_id,time_s,height_m\n";
  char buf[64];
  for (const auto& traj : trajs)
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      out << traj.ball_id << ',' << traj.drop_id << ',';
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", traj.times[i],
                    traj.heights[i]);
      out << buf << '\n';
    }
}

inline void write_trajectories(const std::string& path,
                               const std::vector<Trajectory>& trajs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_trajectories(out, trajs);
}

inline nlohmann::json to_json(const Trajectory& traj) {
  return {{"ball_id", traj.ball_id},
          {"drop_id", traj.drop_id},
          {"times", traj.times},
          {"heights", traj.heights}};
}

}  // namespace sindy
