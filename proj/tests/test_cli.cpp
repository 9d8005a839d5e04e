#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "taucat/cli.hpp"
#include "taucat/fixtures.hpp"
#include "taucat/io.hpp"
#include "taucat/tau.hpp"

using namespace taucat;

namespace {

const char* kA2Spec = R"({
  "vertices": ["1", "2"],
  "arrows": [{"label": "a", "src": "1", "tgt": "2"}],
  "nilpotency_bound": 2
})";

const char* kTensorSpec = R"({
  "local": {
    "vertices": ["*"],
    "arrows": [{"label": "x", "src": "*", "tgt": "*"}],
    "relations": [[{"path": ["x", "x"]}]],
    "nilpotency_bound": 2
  },
  "quiver": {
    "vertices": ["1", "2"],
    "arrows": [{"label": "a", "src": "1", "tgt": "2"}]
  }
})";

std::vector<std::vector<int>> tau_rigid_dims(const AlgebraPtr& a) {
  std::vector<std::vector<int>> dims;
  for (const auto& m : indec_tau_rigid(a)) dims.push_back(m.dims);
  std::sort(dims.begin(), dims.end());
  return dims;
}

struct JobResult {
  int rc;
  std::string out;
  std::string err;
};

JobResult run(const JobSpec& job) {
  std::ostringstream out, err;
  int rc = run_job(job, out, err);
  return {rc, out.str(), err.str()};
}

JobSpec make_job(std::vector<std::string> command, std::string algebra = "") {
  JobSpec job;
  job.command = std::move(command);
  job.algebra = std::move(algebra);
  return job;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

struct ExecResult {
  int rc;
  std::string out;
};

ExecResult exec_cli(const std::string& args) {
  std::string cmd = std::string(TAUCAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 512> buf;
  while (fgets(buf.data(), int(buf.size()), p)) out += buf.data();
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("algebra specs parse to the expected algebras") {
  AlgebraPtr a = parse_algebra_spec(kA2Spec);
  AlgebraPtr ref = fixture("a2");
  CHECK(a->n() == 2);
  CHECK(a->dim() == ref->dim());
  CHECK(tau_rigid_dims(a) == tau_rigid_dims(ref));
  CHECK_FALSE(a->tensor);

  AlgebraPtr t = parse_algebra_spec(kTensorSpec);
  AlgebraPtr tref = fixture("a2-dual-numbers");
  CHECK(t->n() == 2);
  CHECK(t->dim() == tref->dim());
  CHECK(bool(t->tensor));
  CHECK(tau_rigid_dims(t) == tau_rigid_dims(tref));
  CHECK(support_tau_tilting(t).size() == support_tau_tilting(tref).size());
}

TEST_CASE("algebra specs reject malformed input") {
  CHECK_THROWS_WITH(parse_algebra_spec("{"),
                    doctest::Contains("algebra spec: invalid JSON"));
  CHECK_THROWS_WITH(parse_algebra_spec(R"({"vertices": ["1"], "nilpotency_bound": 2, "extra": 1})"),
                    "algebra spec: unknown field \"extra\" in an algebra spec");
  CHECK_THROWS_WITH(parse_algebra_spec(R"({"vertices": ["1"]})"),
                    "algebra spec: an integer nilpotency_bound is required");
  CHECK_THROWS_WITH(parse_algebra_spec(R"({"vertices": ["1", "1"], "nilpotency_bound": 2})"),
                    "algebra spec: duplicate vertex \"1\"");
  CHECK_THROWS_WITH(
      parse_algebra_spec(
          R"({"vertices": ["1", "2"],
              "arrows": [{"label": "a", "src": "1", "tgt": "2"},
                         {"label": "a", "src": "2", "tgt": "1"}],
              "nilpotency_bound": 2})"),
      "algebra spec: duplicate arrow label \"a\"");
  CHECK_THROWS_WITH(
      parse_algebra_spec(
          R"({"vertices": ["1", "2"],
              "arrows": [{"label": "a", "src": "1", "tgt": "2"},
                         {"label": "b", "src": "1", "tgt": "2"}],
              "relations": [[{"path": ["a", "b"]}]],
              "nilpotency_bound": 2})"),
      "algebra spec: path is not composable at arrow \"b\"");
  CHECK_THROWS_WITH(
      parse_algebra_spec(
          R"({"vertices": ["*"],
              "arrows": [{"label": "x", "src": "*", "tgt": "*"}],
              "relations": [[{"coeff": "zoo", "path": ["x", "x"]}]],
              "nilpotency_bound": 2})"),
      "algebra spec: bad coefficient \"zoo\"");
  CHECK_THROWS_WITH(
      parse_algebra_spec(
          R"({"vertices": ["*"],
              "arrows": [{"label": "x", "src": "*", "tgt": "*"}],
              "relations": [[{"coeff": 1.5, "path": ["x", "x"]}]],
              "nilpotency_bound": 2})"),
      "algebra spec: coefficient must be an integer or a rational string");
  CHECK_THROWS_WITH(
      parse_algebra_spec(R"({"local": {"vertices": ["*"], "nilpotency_bound": 2}})"),
      "algebra spec: a tensor spec needs both local and quiver");
  CHECK_THROWS_WITH(
      parse_algebra_spec(
          R"({"local": {"vertices": ["u", "v"], "nilpotency_bound": 2},
              "quiver": {"vertices": ["1"]}})"),
      "algebra spec: the local factor must have exactly one vertex");
}

TEST_CASE("load_algebra reads files and falls back to fixtures") {
  std::string path = "cli_roundtrip_spec.json";
  {
    std::ofstream f(path);
    f << kA2Spec;
  }
  AlgebraPtr from_file = load_algebra(path);
  CHECK(from_file->dim() == 3);
  std::remove(path.c_str());

  AlgebraPtr fx = load_algebra("a3");
  CHECK(fx->n() == 3);
  CHECK_THROWS_WITH(load_algebra("nosuch"), "unknown fixture: nosuch");
}

TEST_CASE("run_job: listing commands") {
  JobResult tau = run(make_job({"tau", "list"}, "a2-dual-numbers"));
  CHECK(tau.rc == 0);
  CHECK(tau.out.find("indecomposable tau-rigid modules: 3") != std::string::npos);
  CHECK(tau.out.find("(2,0)") != std::string::npos);
  CHECK(tau.out.find("(2,2)") != std::string::npos);
  CHECK(tau.out.find("(0,2)") != std::string::npos);

  JobSpec seq = make_job({"seq", "list"}, "a2");
  seq.signed_entries = true;
  JobResult sr = run(seq);
  CHECK(sr.rc == 0);
  CHECK(sr.out.find("signed tau-exceptional sequences of length 2: 10") != std::string::npos);
  CHECK(count_lines(sr.out) == 11);  // header + ten rows

  JobResult stt = run(make_job({"stt", "list"}, "a3"));
  CHECK(stt.rc == 0);
  CHECK(stt.out.find("support tau-tilting objects: 14") != std::string::npos);

  JobResult bon = run(make_job({"bongartz"}, "a2"));
  CHECK(bon.rc == 0);
  CHECK(bon.out.find("(1,0): (1,0) (1,1)") != std::string::npos);

  JobResult perp = run(make_job({"perp"}, "a2"));
  CHECK(perp.rc == 0);
  CHECK(perp.out.find("(1,1): gamma dim 1, simples (0,1)") != std::string::npos);

  JobResult chk = run(make_job({"algebra", "check"}, "a3-rad2"));
  CHECK(chk.rc == 0);
  CHECK(chk.out.find("3 vertices, dimension 5, radical dimension 2") != std::string::npos);
  CHECK(chk.out.find("1=2 2=1 3=0") != std::string::npos);
}

TEST_CASE("run_job: json output is machine readable") {
  JobSpec job = make_job({"tau", "list"}, "a2");
  job.format = "json";
  JobResult r = run(job);
  CHECK(r.rc == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["modules"].size() == 3);

  JobSpec cb = make_job({"cluster", "build"}, "a2");
  cb.format = "json";
  JobResult cr = run(cb);
  CHECK(cr.rc == 0);
  nlohmann::json cj = nlohmann::json::parse(cr.out);
  CHECK(cj["objects"].size() == 5);
  CHECK(cj["morphisms"].size() == 21);

  JobSpec ac = make_job({"algebra", "check"}, "r-xy");
  ac.format = "json";
  JobResult ar = run(ac);
  CHECK(ar.rc == 0);
  nlohmann::json aj = nlohmann::json::parse(ar.out);
  CHECK(aj["dimension"] == 4);
  CHECK(aj["pd_of_simples"][0].is_null());
}

TEST_CASE("run_job: verify commands pass on the tensor fixture") {
  JobResult pe = run(make_job({"verify", "paper-example"}));
  CHECK(pe.rc == 0);
  CHECK(pe.out.find("tau-rigid census: 3 modules") != std::string::npos);
  CHECK(pe.out.find("support tau-tilting: 5 downstairs, 5 upstairs") != std::string::npos);
  CHECK(pe.out.find("length 2 sequences: 10 downstairs, 10 upstairs") != std::string::npos);
  CHECK(pe.out.find("cluster category: 5 objects each") != std::string::npos);
  CHECK(pe.out.find("PASS") != std::string::npos);
  CHECK(pe.err.empty());

  JobResult bi = run(make_job({"verify", "bijections"}, "a2-dual-numbers"));
  CHECK(bi.rc == 0);
  CHECK(bi.out.find("tau commutes with induction") != std::string::npos);
  CHECK(bi.out.find("epsilon commutes with induction") != std::string::npos);
  CHECK(bi.out.find("PASS") != std::string::npos);
}

TEST_CASE("run_job: identical jobs give identical bytes") {
  JobSpec job = make_job({"cluster", "build"}, "a2");
  job.format = "dot";
  JobResult r1 = run(job);
  JobResult r2 = run(job);
  CHECK(r1.rc == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("digraph cluster_morphisms") != std::string::npos);

  JobSpec seq = make_job({"seq", "list"}, "a3");
  JobResult s1 = run(seq);
  JobResult s2 = run(seq);
  CHECK(s1.rc == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("run_job: input errors exit 2") {
  JobResult bad = run(make_job({"tau", "bogus"}, "a2"));
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("input error: unknown command: tau bogus") != std::string::npos);
  CHECK(bad.out.empty());

  JobResult nofix = run(make_job({"tau", "list"}, "nosuch"));
  CHECK(nofix.rc == 2);
  CHECK(nofix.err.find("unknown fixture: nosuch") != std::string::npos);

  JobSpec dot = make_job({"tau", "list"}, "a2");
  dot.format = "dot";
  JobResult dr = run(dot);
  CHECK(dr.rc == 2);
  CHECK(dr.err.find("dot output is only available for cluster build") != std::string::npos);

  JobResult noalg = run(make_job({"tau", "list"}));
  CHECK(noalg.rc == 2);
  CHECK(noalg.err.find("no algebra given") != std::string::npos);

  JobSpec len = make_job({"seq", "list"}, "a2");
  len.length = 5;
  JobResult lr = run(len);
  CHECK(lr.rc == 2);
  CHECK(lr.err.find("length exceeds the number of vertices") != std::string::npos);

  JobSpec kr = make_job({"cluster", "build"});
  kr.algebra = "kronecker_spec.json";
  {
    std::ofstream f(kr.algebra);
    f << R"({"vertices": ["1", "2"],
             "arrows": [{"label": "a", "src": "1", "tgt": "2"},
                        {"label": "b", "src": "1", "tgt": "2"}],
             "nilpotency_bound": 2})";
  }
  JobResult krr = run(kr);
  std::remove(kr.algebra.c_str());
  CHECK(krr.rc == 1);
  CHECK(krr.err.find("verification failure:") != std::string::npos);
  CHECK(krr.err.find("tau-tilting infinite input") != std::string::npos);
}

TEST_CASE("the installed binary behaves like run_job") {
  ExecResult ok = exec_cli("tau list --algebra a2");
  CHECK(ok.rc == 0);
  CHECK(ok.out.find("indecomposable tau-rigid modules: 3") != std::string::npos);

  ExecResult dot = exec_cli("cluster build --algebra a2 --dot");
  CHECK(dot.rc == 0);
  CHECK(dot.out.find("digraph cluster_morphisms") != std::string::npos);

  ExecResult bad = exec_cli("frobnicate --algebra a2");
  CHECK(bad.rc == 2);

  ExecResult missing = exec_cli("tau list --algebra definitely-not-there");
  CHECK(missing.rc == 2);

  ExecResult help = exec_cli("--help");
  CHECK(help.rc == 0);
  CHECK(help.out.find("--algebra") != std::string::npos);
}
