#include "corrpriv/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace corrpriv {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    auto b = cell.find_first_not_of(" \t\r");
    auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return cells;
}

}  // namespace

JointDistribution load_joint_json(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  JointDistribution d;
  try {
    d.x_alphabet = j.value("x_alphabet", std::vector<std::string>{});
    d.y_alphabet = j.value("y_alphabet", std::vector<std::string>{});
    auto grid = j.at("pmf").get<std::vector<std::vector<double>>>();
    if (grid.empty() || grid[0].empty()) throw ParseError(path + ": empty pmf");
    d.pmf.resize(grid.size(), grid[0].size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i].size() != grid[0].size()) {
        throw ParseError(path + ": ragged pmf row " + std::to_string(i));
      }
      for (std::size_t k = 0; k < grid[i].size(); ++k) d.pmf(i, k) = grid[i][k];
    }
    if (j.contains("x_values")) {
      auto v = j.at("x_values").get<std::vector<double>>();
      d.x_values = Eigen::Map<const Vector>(v.data(), v.size());
    }
    if (j.contains("y_values")) {
      auto v = j.at("y_values").get<std::vector<double>>();
      d.y_values = Eigen::Map<const Vector>(v.data(), v.size());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return validate(std::move(d));
}

JointDistribution load_joint_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::string line;
  std::vector<std::vector<std::string>> table;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    table.push_back(split_csv_line(line));
  }
  if (table.size() < 2 || table[0].size() < 2) {
    throw ParseError(path + ": expected a header row and at least one data row");
  }
  JointDistribution d;
  d.y_alphabet.assign(table[0].begin() + 1, table[0].end());
  d.pmf.resize(table.size() - 1, table[0].size() - 1);
  for (std::size_t r = 1; r < table.size(); ++r) {
    if (table[r].size() != table[0].size()) {
      throw ParseError(path + ": line " + std::to_string(r + 1) + " has " +
                       std::to_string(table[r].size()) + " cells, expected " +
                       std::to_string(table[0].size()));
    }
    d.x_alphabet.push_back(table[r][0]);
    for (std::size_t c = 1; c < table[r].size(); ++c) {
      try {
        std::size_t pos = 0;
        d.pmf(r - 1, c - 1) = std::stod(table[r][c], &pos);
        if (pos != table[r][c].size()) throw std::invalid_argument("trailing junk");
      } catch (const std::exception&) {
        throw ParseError(path + ": line " + std::to_string(r + 1) + ", column " +
                         std::to_string(c + 1) + ": bad probability '" +
                         table[r][c] + "'");
      }
    }
  }
  return validate(std::move(d));
}

JointDistribution load_joint(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return load_joint_json(path);
  }
  return load_joint_csv(path);
}

std::string joint_to_json(const JointDistribution& dist) {
  nlohmann::json j;
  j["x_alphabet"] = dist.x_alphabet;
  j["y_alphabet"] = dist.y_alphabet;
  std::vector<std::vector<double>> grid(dist.pmf.rows());
  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    grid[i].assign(dist.pmf.row(i).begin(), dist.pmf.row(i).end());
  }
  j["pmf"] = grid;
  if (dist.x_values) {
    j["x_values"] = std::vector<double>(dist.x_values->begin(), dist.x_values->end());
  }
  if (dist.y_values) {
    j["y_values"] = std::vector<double>(dist.y_values->begin(), dist.y_values->end());
  }
  return j.dump(2);
}

std::string joint_to_csv(const JointDistribution& dist) {
  std::ostringstream out;
  out << "x\\y";
  for (const auto& y : dist.y_alphabet) out << "," << y;
  out << "\n";
  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    out << dist.x_alphabet[i];
    for (Eigen::Index j = 0; j < dist.pmf.cols(); ++j) {
      out << "," << format_double(dist.pmf(i, j));
    }
    out << "\n";
  }
  return out.str();
}

Vector load_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::vector<double> vals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      vals.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw ParseError(path + ": line " + std::to_string(lineno) +
                       ": bad value '" + line + "'");
    }
  }
  return Eigen::Map<const Vector>(vals.data(), vals.size());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace corrpriv
