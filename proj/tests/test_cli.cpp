#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "coinv/json_io.hpp"
#include "oracles.hpp"

using namespace coinv;

namespace {

std::string data_path(const std::string& name) {
  return std::string(COINV_DATA_DIR) + "/" + name;
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = coinv::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex files round-trip through the canonical form") {
  const auto gamma = read_complex_file(data_path("gamma.json"));
  CHECK(gamma == oracle::ten_vertex_sphere());
  std::stringstream buf;
  write_complex_json(buf, gamma);
  CHECK(read_complex_json(buf) == gamma);

  const auto sigma = read_complex_file(data_path("rp2.json"));
  CHECK(sigma == oracle::projective_plane());
  const auto lambda = read_complex_file(data_path("pinched_torus.json"));
  CHECK(lambda == oracle::pinched_torus());
}

TEST_CASE("the bundled sphere file collapses onto the bundled pinched torus") {
  // identifying vertex 0 with vertex 1 must reproduce the printed facet list
  const auto gamma = read_complex_file(data_path("gamma.json"));
  std::vector<Face> collapsed;
  for (Face f : gamma.facets_labeled()) {
    for (int& v : f) {
      if (v == 0) v = 1;
    }
    collapsed.push_back(f);
  }
  const auto lambda = SimplicialComplex::from_facets(collapsed);
  CHECK(lambda == read_complex_file(data_path("pinched_torus.json")));
}

TEST_CASE("labels are optional on ingestion") {
  std::stringstream in(R"({"facets": [[3, 7], [7, 9]]})");
  const auto cx = read_complex_json(in);
  CHECK(cx.labels() == std::vector<int>{3, 7, 9});
  CHECK(cx.facets_labeled() == std::vector<Face>{{3, 7}, {7, 9}});
}

TEST_CASE("dual polynomial serialization") {
  DualPolynomial p(2);
  p.add_term({2, 1}, Rat(1, 2));
  p.add_term({1, 2}, Rat(-3));
  CHECK(dual_polynomial_to_json(p) ==
        R"([{"coeff":"1/2","exps":[2,1]},{"coeff":"-3","exps":[1,2]}])");
}

TEST_CASE("forms files parse and validate") {
  const auto forms = read_forms_file(data_path("gamma_lsop.json"), 10);
  CHECK(forms.size() == 3);
  for (const auto& f : forms) CHECK(f.degree() == 1);
  CHECK(forms[1].coeff({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == -1);
  CHECK(forms[0].coeff({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}) == Rat(1, 2));
  CHECK_THROWS_AS(read_forms_file(data_path("gamma_lsop.json"), 6), std::invalid_argument);
}

TEST_CASE("analyze prints the enumerative report") {
  const auto r = run_cli({"analyze", data_path("rp2.json"), "--field", "q"});
  CHECK(r.status == 0);
  CHECK(r.out.find("h,1,3,6,0\n") != std::string::npos);
  CHECK(r.out.find("pseudomanifold: yes, without boundary: yes\n") != std::string::npos);
  CHECK(r.out.find("orientable: no\n") != std::string::npos);
  CHECK(r.out.find("cohen_macaulay,yes\n") != std::string::npos);
  CHECK(r.out.find("homology_sphere,no\n") != std::string::npos);
}

TEST_CASE("analyze emits a re-ingestable canonical file") {
  const std::string tmp = "cli_emit_roundtrip.json";
  const auto r = run_cli({"analyze", data_path("gamma.json"), "--emit", tmp});
  CHECK(r.status == 0);
  CHECK(read_complex_file(tmp) == oracle::ten_vertex_sphere());
  std::remove(tmp.c_str());
}

TEST_CASE("hilbert prints both Hilbert rows") {
  const auto r = run_cli({"hilbert", data_path("gamma.json"), "--caps", "4"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "hf,1,10,34,74,120,144,136,96,48,16,0\n"
        "hf_mod_l,1,9,24,40,46,24,1,0,0,0,0\n");
}

TEST_CASE("wlp quotient layout matches the worked tables") {
  const auto r = run_cli({"wlp", data_path("rp2.json"), "--caps", "4", "--field", "2",
                          "--quotient"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "hf,1,6,21,46,75,90,85,60,30,10,0\n"
        "hf_mod_l,1,5,15,25,30,21,10,0,0,0,0\n"
        "verdict,fails\n");
}

TEST_CASE("wlp default layout lists every degree") {
  const auto r = run_cli({"wlp", data_path("gamma.json"), "--caps", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.find("degree,dim,rank_to_next,full_rank_target,status\n") == 0);
  CHECK(r.out.find("5,144,135,136,deficient\n") != std::string::npos);
  CHECK(r.out.find("10,0,,,\n") != std::string::npos);
  CHECK(r.out.find("verdict,fails\n") != std::string::npos);

  // powers above 1 get their own rows
  const auto r2 = run_cli({"wlp", data_path("rp2.json"), "--caps", "3", "--jmax", "2"});
  CHECK(r2.status == 0);
  CHECK(r2.out.find("power,2,0,2,") != std::string::npos);
}

TEST_CASE("perp reads extra forms from a file") {
  const auto r = run_cli({"perp", data_path("gamma.json"), "--extra",
                          data_path("gamma_lsop.json"), "--max", "4"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "degree,perp_dim,generators\n"
        "0,1,0\n1,7,0\n2,7,0\n3,1,1\n4,0,0\n");
}

TEST_CASE("stress reports the vanishing checks") {
  const auto r = run_cli({"stress", data_path("gamma.json")});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"term_count\": 96") != std::string::npos);
  CHECK(r.out.find("\"elementary_contractions_vanish\": true") != std::string::npos);

  const auto none = run_cli({"stress", data_path("rp2.json")});
  CHECK(none.status == 1);
  CHECK(none.err.find("no top-dimensional cycle") != std::string::npos);
}

TEST_CASE("compositions verify emits one row per check") {
  const auto r = run_cli({"compositions", "verify", "--dmax", "2"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "kind,d,i,lhs,rhs,ok\n"
        "peak,1,1,1,0,yes\n"
        "linkage,1,,1,1,yes\n"
        "peak,2,1,0,0,yes\n"
        "peak,2,2,2,1,yes\n"
        "linkage,2,,1,1,yes\n");
}

TEST_CASE("lm output is deterministic") {
  const std::vector<std::string> args{"lm",      "--n",    "8",   "--d",    "2",
                                      "--p",     "0.5",    "--trials", "20",
                                      "--seed",  "99",     "--mode",   "homology"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("n,d,p,trials,seed,field,mode,hits,skipped,estimate,mean_fd\n") == 0);
}

TEST_CASE("cd prints the threshold table") {
  const auto r = run_cli({"cd", "--dmax", "4", "--tol", "1e-9"});
  CHECK(r.status == 0);
  CHECK(r.out == "d,2,3,4\nc_d,2.783,3.911,4.963\n");
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  CHECK(run_cli({"wlp", data_path("gamma.json")}).status == 2);           // missing --caps
  CHECK(run_cli({"frobnicate"}).status == 2);                             // unknown verb
  CHECK(run_cli({"analyze", "no_such_file.json"}).status == 1);           // domain error
  CHECK(run_cli({"analyze", data_path("gamma.json"), "--field", "15"}).status == 1);
  CHECK(run_cli({"lm", "--n", "8", "--d", "2", "--p", "0.5", "--trials", "2",
                 "--mode", "homology"}).status == 2);                     // seed is mandatory
  // malformed JSON
  std::ofstream bad("cli_bad.json");
  bad << "{ not json";
  bad.close();
  CHECK(run_cli({"analyze", "cli_bad.json"}).status == 1);
  std::remove("cli_bad.json");
}
