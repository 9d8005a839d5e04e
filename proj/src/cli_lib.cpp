#include "taucat/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "taucat/cluster.hpp"
#include "taucat/homology.hpp"
#include "taucat/io.hpp"
#include "taucat/sequences.hpp"
#include "taucat/tau.hpp"
#include "taucat/wide.hpp"

namespace taucat {

namespace {

using nlohmann::json;

std::string dims_str(const std::vector<int>& dims) {
  std::string s = "(";
  for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

std::string signed_str(const SignedObject& x) {
  return dims_str(x.m.dims) + (x.shifted ? "[1]" : "");
}

// Summand dim tokens of a module, sorted for stable output.
std::vector<std::string> summand_tokens(const Representation& m, unsigned seed) {
  std::vector<std::string> toks;
  if (m.is_zero()) return toks;
  for (const auto& [rep, mult] : decompose(m, seed).summands)
    for (int k = 0; k < mult; ++k) toks.push_back(dims_str(rep.dims));
  std::sort(toks.begin(), toks.end());
  return toks;
}

std::string join_tokens(const std::vector<std::string>& toks) {
  if (toks.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < toks.size(); ++i) s += (i ? " " : "") + toks[i];
  return s;
}

// The signed atoms of an algebra: indecomposable tau-rigid modules first,
// then the shifted projectives in vertex order.
std::vector<SignedObject> atom_list(const AlgebraPtr& a) {
  std::vector<SignedObject> atoms;
  for (const auto& m : indec_tau_rigid(a)) atoms.push_back({m, false});
  for (int v = 0; v < a->n(); ++v) atoms.push_back({indec_projective(a, v), true});
  return atoms;
}

SupportPair atom_pair(const AlgebraPtr& a, const SignedObject& u) {
  SupportPair p;
  p.m = u.shifted ? zero_rep(a) : u.m;
  p.p = u.shifted ? u.m : zero_rep(a);
  return p;
}

void cmd_algebra_check(const AlgebraPtr& a, const JobSpec& job, std::ostream& out) {
  int rad = a->radical_basis.cols();
  if (job.format == "json") {
    json j;
    j["vertices"] = a->n();
    j["dimension"] = a->dim();
    j["radical_dimension"] = rad;
    json pds = json::array();
    for (int v = 0; v < a->n(); ++v) {
      PdResult pd = pd_capped(simple_rep(a, v), job.pd_cap);
      pds.push_back(pd.capped ? json(nullptr) : json(pd.pd));
    }
    j["pd_of_simples"] = pds;
    out << j.dump(2) << "\n";
    return;
  }
  out << "algebra ok: " << a->n() << " vertices, dimension " << a->dim()
      << ", radical dimension " << rad << "\n";
  out << "pd of simples:";
  for (int v = 0; v < a->n(); ++v) {
    PdResult pd = pd_capped(simple_rep(a, v), job.pd_cap);
    out << " " << a->quiver->vertices[v] << "=";
    if (pd.capped)
      out << ">=" << job.pd_cap;
    else
      out << pd.pd;
  }
  out << "\n";
}

void cmd_tau_list(const AlgebraPtr& a, const JobSpec& job, std::ostream& out) {
  std::vector<Representation> tr = indec_tau_rigid(a);
  if (job.format == "json") {
    json rows = json::array();
    for (const auto& m : tr)
      rows.push_back({{"dims", m.dims}, {"g", g_vector(m).coords}});
    out << json{{"count", tr.size()}, {"modules", rows}}.dump(2) << "\n";
    return;
  }
  out << "indecomposable tau-rigid modules: " << tr.size() << "\n";
  for (size_t i = 0; i < tr.size(); ++i) {
    GVector g = g_vector(tr[i]);
    std::vector<int> gd(g.coords.begin(), g.coords.end());
    out << i << ": dims " << dims_str(tr[i].dims) << " g " << dims_str(gd) << "\n";
  }
}

void cmd_stt_list(const AlgebraPtr& a, const JobSpec& job, std::ostream& out) {
  std::vector<SttObject> stts = support_tau_tilting(a);
  if (job.format == "json") {
    json rows = json::array();
    for (const auto& t : stts) {
      json row;
      row["modules"] = summand_tokens(t.m, job.seed);
      json verts = json::array();
      for (int v : t.proj_verts) verts.push_back(a->quiver->vertices[v]);
      row["shifted"] = verts;
      rows.push_back(row);
    }
    out << json{{"count", stts.size()}, {"objects", rows}}.dump(2) << "\n";
    return;
  }
  out << "support tau-tilting objects: " << stts.size() << "\n";
  for (size_t i = 0; i < stts.size(); ++i) {
    out << i << ": modules " << join_tokens(summand_tokens(stts[i].m, job.seed))
        << " shifted ";
    if (stts[i].proj_verts.empty()) out << "-";
    for (size_t k = 0; k < stts[i].proj_verts.size(); ++k)
      out << (k ? " " : "") << a->quiver->vertices[stts[i].proj_verts[k]];
    out << "\n";
  }
}

void cmd_bongartz(const AlgebraPtr& a, const JobSpec& job, std::ostream& out) {
  std::vector<Representation> tr = indec_tau_rigid(a);
  if (job.format == "json") {
    json rows = json::array();
    for (const auto& m : tr)
      rows.push_back({{"module", dims_str(m.dims)},
                      {"completion", summand_tokens(bongartz(m), job.seed)}});
    out << json{{"count", tr.size()}, {"completions", rows}}.dump(2) << "\n";
    return;
  }
  out << "bongartz completions: " << tr.size() << "\n";
  for (const auto& m : tr)
    out << dims_str(m.dims) << ": "
        << join_tokens(summand_tokens(bongartz(m), job.seed)) << "\n";
}

void cmd_perp(const AlgebraPtr& a, const JobSpec& job, std::ostream& out) {
  std::vector<SignedObject> atoms = atom_list(a);
  if (job.format == "json") {
    json rows = json::array();
    for (const auto& u : atoms) {
      WidePtr w = jasso_reduction(a, atom_pair(a, u));
      json simples = json::array();
      for (const auto& s : w->simples) simples.push_back(dims_str(s.dims));
      rows.push_back({{"object", signed_str(u)},
                      {"gamma_dimension", w->gamma->dim()},
                      {"simples", simples}});
    }
    out << json{{"count", atoms.size()}, {"perpendicular", rows}}.dump(2) << "\n";
    return;
  }
  out << "perpendicular categories: " << atoms.size() << "\n";
  for (const auto& u : atoms) {
    WidePtr w = jasso_reduction(a, atom_pair(a, u));
    out << signed_str(u) << ": gamma dim " << w->gamma->dim() << ", simples ";
    std::vector<std::string> toks;
    for (const auto& s : w->simples) toks.push_back(dims_str(s.dims));
    out << join_tokens(toks) << "\n";
  }
}

void cmd_seq_list(const AlgebraPtr& a, const JobSpec& job, std::ostream& out) {
  int t = job.length < 0 ? a->n() : job.length;
  std::vector<SignedSequence> seqs = enumerate_tau_exceptional(a, t, job.signed_entries);
  if (job.format == "json") {
    json rows = json::array();
    for (const auto& s : seqs) {
      json row = json::array();
      for (const auto& e : s.entries) row.push_back(signed_str(e));
      rows.push_back(row);
    }
    out << json{{"count", seqs.size()},
                {"signed", job.signed_entries},
                {"length", t},
                {"sequences", rows}}
               .dump(2)
        << "\n";
    return;
  }
  out << (job.signed_entries ? "signed " : "") << "tau-exceptional sequences of length "
      << t << ": " << seqs.size() << "\n";
  for (const auto& s : seqs) {
    for (size_t k = 0; k < s.entries.size(); ++k)
      out << (k ? " " : "") << signed_str(s.entries[k]);
    out << "\n";
  }
}

void cmd_cluster_build(const AlgebraPtr& a, const JobSpec& job, std::ostream& out) {
  ClusterCategory cat = build_category(a);
  if (job.format == "dot") {
    out << export_category(cat, "dot");
    return;
  }
  if (job.format == "json") {
    ClusterSkeleton sk = skeleton(cat);
    json objs = json::array();
    for (const auto& o : sk.objects) objs.push_back({{"key", o.key}, {"simples", o.simples}});
    json mors = json::array();
    for (const auto& m : sk.morphisms) {
      json parts = json::array();
      for (const auto& p : m.parts)
        parts.push_back({{"dims", p.dims}, {"shifted", p.shifted}});
      mors.push_back({{"src", m.src}, {"tgt", m.tgt}, {"parts", parts}});
    }
    json comp = json::array();
    for (const auto& c : sk.compose) comp.push_back(c);
    out << json{{"objects", objs},
                {"morphisms", mors},
                {"identity", sk.identity},
                {"compose", comp}}
               .dump(2)
        << "\n";
    return;
  }
  out << "cluster category: " << cat.objects.size() << " objects, "
      << cat.morphisms.size() << " morphisms\n";
  for (const auto& o : cat.objects) {
    std::vector<std::string> toks;
    for (const auto& s : o.w->simples) toks.push_back(dims_str(s.dims));
    out << "object " << o.key << ": simples " << join_tokens(toks) << "\n";
  }
  for (size_t i = 0; i < cat.objects.size(); ++i)
    for (size_t j = 0; j < cat.objects.size(); ++j)
      if (!cat.hom[i][j].empty())
        out << "hom " << cat.objects[i].key << " -> " << cat.objects[j].key << ": "
            << cat.hom[i][j].size() << "\n";
}

// Unique matching of induced objects against an upstairs list.
template <typename T, typename SameFn>
void match_bijectively(const std::vector<T>& induced, const std::vector<T>& upstairs,
                       SameFn same, const char* what) {
  if (induced.size() != upstairs.size())
    throw std::runtime_error(std::string(what) + ": counts differ (" +
                             std::to_string(induced.size()) + " vs " +
                             std::to_string(upstairs.size()) + ")");
  std::vector<bool> hit(upstairs.size(), false);
  for (const auto& x : induced) {
    bool found = false;
    for (size_t j = 0; j < upstairs.size(); ++j) {
      if (hit[j] || !same(x, upstairs[j])) continue;
      hit[j] = true;
      found = true;
      break;
    }
    if (!found) throw std::runtime_error(std::string(what) + ": an induced object is unmatched");
  }
}

void cmd_verify_paper_example(const AlgebraPtr& lam, std::ostream& out) {
  if (!lam->tensor) throw std::runtime_error("no tensor provenance");
  AlgebraPtr kq = lam->tensor->base_quiver;

  // Indecomposable tau-rigid census: inductions of the base list, entrywise.
  std::vector<Representation> base_tr = indec_tau_rigid(kq);
  std::vector<Representation> up_tr = indec_tau_rigid(lam);
  std::vector<Representation> induced;
  for (const auto& m : base_tr) induced.push_back(induction(lam, m));
  match_bijectively(induced, up_tr,
                    [](const Representation& x, const Representation& y) {
                      return x.dims == y.dims && is_isomorphic(x, y).isomorphic;
                    },
                    "tau-rigid census");
  out << "tau-rigid census: " << up_tr.size() << " modules, induction matches entrywise\n";

  // Support tau-tilting objects: induced pairs against the upstairs list.
  std::vector<SttObject> base_stt = support_tau_tilting(kq);
  std::vector<SttObject> up_stt = support_tau_tilting(lam);
  std::vector<SttObject> ind_stt;
  for (const auto& t : base_stt) {
    SttObject u;
    u.m = t.m.is_zero() ? zero_rep(lam) : induction(lam, t.m);
    u.p = t.p.is_zero() ? zero_rep(lam) : induction(lam, t.p);
    ind_stt.push_back(std::move(u));
  }
  match_bijectively(ind_stt, up_stt,
                    [](const SttObject& x, const SttObject& y) {
                      return x.m.dims == y.m.dims && x.p.dims == y.p.dims &&
                             is_isomorphic(x.m, y.m).isomorphic &&
                             is_isomorphic(x.p, y.p).isomorphic;
                    },
                    "support tau-tilting bijection");
  out << "support tau-tilting: " << base_stt.size() << " downstairs, " << up_stt.size()
      << " upstairs, induction bijective\n";

  // Complete signed sequences, entrywise induction against the upstairs list.
  std::string seq_report = verify_sequence_bijection(kq, lam, kq->n());
  if (seq_report.find("PASS") == std::string::npos)
    throw std::runtime_error("sequence bijection did not verify");
  out << seq_report.substr(0, seq_report.find('\n')) << "\n";

  // Cluster morphism categories and the induced functor.
  ClusterCategory down = build_category(kq);
  ClusterCategory up = build_category(lam);
  build_functor(down, up);
  out << "cluster category: " << up.objects.size()
      << " objects each, functor is an equivalence\n";
  out << "PASS\n";
}

void cmd_verify_bijections(const AlgebraPtr& lam, std::ostream& out) {
  if (!lam->tensor) throw std::runtime_error("no tensor provenance");
  AlgebraPtr kq = lam->tensor->base_quiver;
  std::vector<Representation> base_tr = indec_tau_rigid(kq);

  auto want_iso = [](const Representation& got, const Representation& want,
                     const char* what, const std::vector<int>& at) {
    if (got.dims != want.dims || !is_isomorphic(got, want).isomorphic)
      throw std::runtime_error(std::string(what) + " fails at module dims " + dims_str(at) +
                               ": got " + dims_str(got.dims) + ", want " +
                               dims_str(want.dims));
  };

  int tau_checked = 0;
  for (const auto& m : base_tr) {
    Representation tm = tau(m);
    if (tm.is_zero()) continue;  // projective downstairs
    want_iso(tau(induction(lam, m)), induction(lam, tm), "tau * induction", m.dims);
    ++tau_checked;
  }
  out << "tau commutes with induction: " << tau_checked << " modules\n";

  int nu_checked = 0;
  for (int v = 0; v < kq->n(); ++v) {
    Representation p = indec_projective(kq, v);
    want_iso(nakayama_of_projective(induction(lam, p)),
             induction(lam, nakayama_of_projective(p)), "nu * induction", p.dims);
    ++nu_checked;
  }
  out << "nu commutes with induction: " << nu_checked << " projectives\n";

  for (const auto& m : base_tr)
    if (g_vector(induction(lam, m)) != g_vector(m))
      throw std::runtime_error("g-vector changes under induction at module dims " +
                               dims_str(m.dims));
  out << "g-vectors preserved: " << base_tr.size() << " modules\n";

  for (const auto& m : base_tr)
    want_iso(bongartz(induction(lam, m)), induction(lam, bongartz(m)),
             "bongartz * induction", m.dims);
  out << "bongartz commutes with induction: " << base_tr.size() << " modules\n";

  for (const auto& m : base_tr) {
    SttObject down = co_bongartz(m);
    SttObject up = co_bongartz(induction(lam, m));
    want_iso(up.m, down.m.is_zero() ? zero_rep(lam) : induction(lam, down.m),
             "co-bongartz module part", m.dims);
    want_iso(up.p, down.p.is_zero() ? zero_rep(lam) : induction(lam, down.p),
             "co-bongartz shifted part", m.dims);
  }
  out << "co-bongartz commutes with induction: " << base_tr.size() << " modules\n";

  // Epsilon on all compatible (atom, module) pairs.
  int eps_checked = 0;
  std::vector<SignedObject> atoms = atom_list(kq);
  for (const auto& u : atoms)
    for (const auto& x : base_tr) {
      if (!u.shifted && x.dims == u.m.dims && is_isomorphic(x, u.m).isomorphic) continue;
      if (u.shifted && hom_dim(u.m, x) != 0) continue;
      if (!u.shifted && !is_tau_rigid(direct_sum(kq, {u.m, x}))) continue;
      SignedObject down = epsilon(atom_pair(kq, u), {x, false});
      SignedObject up_u{induction(lam, u.m), u.shifted};
      SignedObject up = epsilon(atom_pair(lam, up_u), {induction(lam, x), false});
      if (up.shifted != down.shifted)
        throw std::runtime_error("epsilon * induction changes the shift at pair " +
                                 signed_str(u) + ", " + dims_str(x.dims));
      want_iso(up.m, induction(lam, down.m), "epsilon * induction", x.dims);
      ++eps_checked;
    }
  out << "epsilon commutes with induction: " << eps_checked << " pairs\n";

  std::string seq_report = verify_sequence_bijection(kq, lam, kq->n());
  if (seq_report.find("PASS") == std::string::npos)
    throw std::runtime_error("sequence bijection did not verify");
  out << seq_report.substr(0, seq_report.find('\n')) << "\n";
  out << "PASS\n";
}

}  // namespace

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  std::string cmd;
  for (size_t i = 0; i < job.command.size(); ++i) cmd += (i ? " " : "") + job.command[i];

  static const char* known[] = {"algebra check", "tau list",        "stt list",
                                "bongartz",      "perp",            "seq list",
                                "cluster build", "verify paper-example",
                                "verify bijections"};
  AlgebraPtr a;
  try {
    bool ok = false;
    for (const char* k : known) ok = ok || cmd == k;
    if (!ok) throw std::runtime_error("unknown command: " + cmd);
    if (job.format != "table" && job.format != "json" && job.format != "dot")
      throw std::runtime_error("unknown format: " + job.format);
    if (job.format == "dot" && cmd != "cluster build")
      throw std::runtime_error("dot output is only available for cluster build");
    std::string source = job.algebra;
    if (source.empty()) {
      if (cmd.substr(0, 6) == "verify")
        source = "example-7";
      else
        throw std::runtime_error("no algebra given (use --algebra <path|fixture>)");
    }
    a = load_algebra(source);
    if (cmd == "seq list" && job.length > a->n())
      throw std::runtime_error("length exceeds the number of vertices");
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd == "algebra check")
      cmd_algebra_check(a, job, out);
    else if (cmd == "tau list")
      cmd_tau_list(a, job, out);
    else if (cmd == "stt list")
      cmd_stt_list(a, job, out);
    else if (cmd == "bongartz")
      cmd_bongartz(a, job, out);
    else if (cmd == "perp")
      cmd_perp(a, job, out);
    else if (cmd == "seq list")
      cmd_seq_list(a, job, out);
    else if (cmd == "cluster build")
      cmd_cluster_build(a, job, out);
    else if (cmd == "verify paper-example")
      cmd_verify_paper_example(a, out);
    else
      cmd_verify_bijections(a, out);
    return 0;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace taucat
