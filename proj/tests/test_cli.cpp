// Copyright 2026 The qbody Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qbody/cli.hpp"

using namespace qbody;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qbody");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const Outcome o = run_cli(std::move(args));
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("xo") {
  const Json j = run_json({"xo", "--m", "4"});
  const RealMatrix closed = matrix_from_json(j.at("closed_form_matrix"));
  CHECK(closed(1, 1) == -0.5);
  CHECK(closed(1, 2) == 0.5);
  CHECK(j.at("max_difference").get<double>() < 1e-12);
  const RealMatrix two = matrix_from_json(run_json({"xo", "--m", "2"}).at("closed_form_matrix"));
  CHECK(two.bottomRightCorner(2, 2) == (RealMatrix(2, 2) << 0, 1, 1, 0).finished());

  const Outcome odd = run_cli({"xo", "--m", "3"});
  CHECK(odd.code == 2);
  CHECK(odd.err.find("m must be even") != std::string::npos);
}

TEST_CASE("witness") {
  const Json a = run_json({"witness", "--m", "4", "--d", "2"});
  CHECK(a.at("rank") == 5);
  CHECK(a.at("excluded") == true);
  CHECK(run_json({"witness", "--m", "4", "--d", "3"}).at("excluded") == false);
  const Json c = run_json({"witness", "--m", "8", "--d", "2"});
  CHECK(c.at("rank") == 9);
  CHECK(c.at("excluded") == true);
  CHECK(run_cli({"witness", "--m", "4"}).code == 2);
}

TEST_CASE("seesaw") {
  const Outcome first = run_cli({"seesaw", "--m", "4", "--trials", "50"});
  REQUIRE(first.code == 0);
  CHECK(std::abs(Json::parse(first.out).at("value").get<double>() - 8.0) <= 1e-6);
  CHECK(std::abs(run_json({"seesaw", "--m", "2", "--trials", "10"}).at("value").get<double>() - 2.0) <= 1e-6);
  const Outcome again = run_cli({"seesaw", "--m", "4", "--trials", "50"});
  CHECK(again.out == first.out);
  const Outcome parallel = run_cli({"seesaw", "--m", "4", "--trials", "50", "--parallel", "4"});
  CHECK(parallel.out == first.out);
  const SeesawResult back = seesaw_result_from_json(Json::parse(first.out));
  CHECK(back.config.count() == 4);
}

TEST_CASE("certify") {
  const Json four = run_json({"certify", "--m", "4"});
  CHECK(four.at("primal").get<double>() == doctest::Approx(8.0));
  CHECK(four.at("dual").get<double>() == doctest::Approx(8.0));
  CHECK(std::abs(four.at("gap").get<double>()) <= 1e-9);
  CHECK(four.at("min_eig_slack").get<double>() >= -1e-9);
  const Json six = run_json({"certify", "--m", "6"});
  CHECK(six.at("primal").get<double>() == doctest::Approx(18.0));
  CHECK(six.at("dual").get<double>() == doctest::Approx(18.0));
  const Json one = run_json({"certify", "--m", "1", "--tolerance-profile", "strict"});
  CHECK(one.at("primal").get<double>() == doctest::Approx(0.5));
  CHECK(one.at("dual").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("realize") {
  for (auto [m, dim] : {std::pair{2, 2}, std::pair{4, 4}, std::pair{6, 8}}) {
    const Json j = run_json({"realize", "--m", std::to_string(m)});
    CHECK(j.at("local_dimension") == dim);
    CHECK(j.at("max_deviation").get<double>() < 1e-10);
    CHECK(j.at("max_marginal").get<double>() < 1e-10);
    CHECK(j.at("witness").at("excluded") == false);
    CHECK_NOTHROW(realization_from_json(j.at("realization")));
  }
  CHECK(run_cli({"realize", "--m", "18"}).code == 2);
}

TEST_CASE("cone") {
  const auto path = std::filesystem::temp_directory_path() / "qbody_cone_test.csv";
  const Json s = run_json({"cone", "--grid", "64", "--out", path.string()});
  CHECK(s.at("projective").at("lateral_surface_fractional_z") == 0);
  CHECK(s.at("projective").at("classes").at("apex").get<int>() >= 2);
  CHECK(s.at("povm").at("classes").at("apex").get<int>() >= 2);
  CHECK(s.at("povm").at("axis_fractional_z").get<int>() > 0);

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "kind,alpha,bloch1,bloch2,bloch3,x,y,z,classification");
  bool found_half = false;
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::vector<std::string> f;
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    REQUIRE(f.size() == 9);
    if (f[0] == "povm" && std::stod(f[5]) == 0.0 && std::stod(f[6]) == 0.0 &&
        std::abs(std::stod(f[7]) - 0.5) <= 1e-15) {
      found_half = true;
    }
  }
  CHECK(found_half);
  CHECK(rows == s.at("projective").at("points").get<std::size_t>() +
                    s.at("povm").at("points").get<std::size_t>());
  std::filesystem::remove(path);

  CHECK(run_cli({"cone", "--grid", "8", "--out", "/nonexistent-dir/x.csv"}).code == 4);
  CHECK(run_cli({"cone", "--grid", "8"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"xo", "--m", "4", "--format", "csv"}).code == 2);
  CHECK(run_cli({"certify", "--m", "4", "--psd-eps", "0"}).code == 2);
  CHECK(run_cli({"xo", "--help"}).code == 0);
}

TEST_CASE("installed binary exit codes") {
  const std::string bin = QBODY_CLI_PATH;
  CHECK(std::system((bin + " xo --m 4 > /dev/null").c_str()) == 0);
  const int odd = std::system((bin + " xo --m 3 > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(odd) == 2);
}
