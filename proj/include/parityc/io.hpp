#pragma once

// JSON / TSV serialization.  All emitted JSON uses insertion-ordered keys
// and contains no timing, host, or shard information, so any two runs with
// the same inputs produce byte-identical files.

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "group.hpp"

namespace parityc {

using ojson = nlohmann::ordered_json;

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_input, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::bad_input, "cannot write file: " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// Groups.

inline ojson group_to_json(const FiniteGroup& g) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "group";
  j["name"] = g.name;
  j["order"] = g.n;
  j["labels"] = g.labels;
  ojson rows = ojson::array();
  for (int a = 0; a < g.n; ++a) {
    ojson row = ojson::array();
    for (int b = 0; b < g.n; ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

inline GroupRef group_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("table")) fail(errc::bad_input, "group JSON needs a \"table\"");
  const auto& tj = j["table"];
  if (!tj.is_array()) fail(errc::bad_input, "group table must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& rj : tj) {
    std::vector<int> row;
    for (const auto& v : rj) row.push_back(v.get<int>());
    rows.push_back(std::move(row));
  }
  std::string name = j.value("name", "group:" + std::to_string(rows.size()));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return validate_group(name, rows, labels);
}

// A group spec is a builtin catalog name, an inline JSON object, or a path
// to a JSON file.
inline GroupRef resolve_group(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return group_from_json(ojson::parse(spec));
  if (spec.find('/') != std::string::npos ||
      (spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0)) {
    ojson j;
    try {
      j = ojson::parse(read_text_file(spec));
    } catch (const ojson::parse_error& e) {
      fail(errc::bad_input, std::string("invalid JSON in ") + spec + ": " + e.what());
    }
    return group_from_json(j);
  }
  return builtin_group(spec);
}

// ---------------------------------------------------------------------------
// Cochains.

inline ojson cochain_to_json(const Cochain& c) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "cochain";
  j["p"] = c.p;
  j["G"] = group_to_json(c.G());
  j["N"] = group_to_json(c.N());
  ojson lj = ojson::array();
  for (const auto& images : c.L.maps) lj.push_back(images);
  j["L"] = std::move(lj);
  const int n = c.G().n;
  if (c.p == 0) {
    j["f"] = c.f[0];
  } else {
    // Nested arrays, first argument outermost.
    std::function<ojson(int, long long)> nest = [&](int depth, long long base) -> ojson {
      ojson arr = ojson::array();
      const long long stride = pow_ll(n, c.p - depth - 1);
      for (int a = 0; a < n; ++a) {
        if (depth + 1 == c.p)
          arr.push_back(c.f[base + a]);
        else
          arr.push_back(nest(depth + 1, base + a * stride));
      }
      return arr;
    };
    j["f"] = nest(0, 0);
  }
  return j;
}

inline Cochain cochain_from_json(const ojson& j) {
  Cochain c;
  if (!j.is_object() || !j.contains("p") || !j.contains("G") || !j.contains("N") ||
      !j.contains("L") || !j.contains("f"))
    fail(errc::bad_input, "cochain JSON needs p, G, N, L, f");
  c.p = j["p"].get<int>();
  c.L.G = group_from_json(j["G"]);
  c.L.N = group_from_json(j["N"]);
  for (const auto& images : j["L"]) c.L.maps.push_back(images.get<std::vector<int>>());
  validate_quasiaction(c.L);
  if (c.p == 0) {
    c.f = {j["f"].get<int>()};
  } else {
    c.f.clear();
    std::function<void(const ojson&, int)> flatten = [&](const ojson& node, int depth) {
      if (depth == c.p) {
        c.f.push_back(node.get<int>());
        return;
      }
      if (!node.is_array() || static_cast<int>(node.size()) != c.L.G->n)
        fail(errc::degree_mismatch, "cochain value array has the wrong shape");
      for (const auto& sub : node) flatten(sub, depth + 1);
    };
    flatten(j["f"], 0);
  }
  validate_cochain(c);
  return c;
}

// ---------------------------------------------------------------------------
// Extensions.

inline ojson extension_to_json(const QuasiExtension& e) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "quasi_extension";
  j["base"] = e.G().name;
  j["fiber"] = e.N().name;
  j["fiber_mode"] = e.mode == FiberMode::full ? "full" : "holonomy";
  j["fiber_members"] = e.fiber;
  j["order"] = e.size();
  j["associative"] = e.associative;
  if (!e.associative) j["witness"] = e.assoc_witness;
  ojson labels = ojson::array();
  for (int x = 0; x < e.size(); ++x)
    labels.push_back("(" + e.N().labels[e.npart(x)] + "," + e.G().labels[e.gpart(x)] + ")");
  j["pairs"] = std::move(labels);
  ojson rows = ojson::array();
  for (int a = 0; a < e.size(); ++a) {
    ojson row = ojson::array();
    for (int b = 0; b < e.size(); ++b) row.push_back(e.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (e.associative) {
    ojson prof = ojson::array();
    auto g = validate_group("ext", [&] {
      std::vector<std::vector<int>> t(e.size(), std::vector<int>(e.size()));
      for (int a = 0; a < e.size(); ++a)
        for (int b = 0; b < e.size(); ++b) t[a][b] = e.mul(a, b);
      return t;
    }());
    for (auto [ord, count] : order_profile(*g)) prof.push_back(ojson::array({ord, count}));
    j["order_profile"] = std::move(prof);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Census reports.

inline ojson census_to_json(const CensusReport& r) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "census";
  j["base"] = r.G->name;
  j["fiber"] = r.N->name;
  j["degree"] = r.p;
  j["scope"] = r.scope;
  j["quasiactions"] = r.quasiactions;
  j["actions"] = r.actions;
  const std::string zkey = "Z" + std::to_string(r.p);
  const std::string bkey = "B" + std::to_string(r.p);
  const std::string hkey = "H" + std::to_string(r.p);
  ojson fibers = ojson::array();
  for (const auto& fb : r.fibers) {
    ojson fj;
    fj["l_index"] = fb.l_index;
    fj["l"] = fb.l_tuple;
    fj["action"] = fb.action;
    fj["cochain_space"] = fb.cochain_space;
    fj[zkey] = fb.z;
    fj["coboundaries"] = fb.coboundaries;
    fj[bkey] = fb.coboundaries_in_z;
    if (fb.classes >= 0) fj[hkey] = fb.classes;
    if (fb.z <= 64) {
      ojson reps = ojson::array();
      for (const auto& rep : fb.reps) reps.push_back(rep);
      fj["reps"] = std::move(reps);
    }
    ojson strata = ojson::array();
    for (const auto& st : fb.strata) {
      ojson sj;
      sj["members"] = st.members;
      sj["count"] = st.count;
      sj["irreducible"] = st.irreducible;
      strata.push_back(std::move(sj));
    }
    fj["strata"] = std::move(strata);
    fibers.push_back(std::move(fj));
  }
  j["fibers"] = std::move(fibers);
  j["z_total"] = r.z_total;
  if (r.class_total >= 0) j["class_total"] = r.class_total;
  if (r.weak_classes >= 0) j["weak_classes"] = r.weak_classes;
  return j;
}

inline std::string census_to_tsv(const CensusReport& r) {
  std::ostringstream out;
  out << "# census schema 1\tbase=" << r.G->name << "\tfiber=" << r.N->name << "\tdegree=" << r.p
      << "\tscope=" << r.scope << "\tquasiactions=" << r.quasiactions << "\tactions=" << r.actions
      << "\n";
  out << "l_index\taction\tcochain_space\tZ\tB\tH\tstrata\n";
  for (const auto& fb : r.fibers) {
    out << fb.l_index << '\t' << (fb.action ? 1 : 0) << '\t' << fb.cochain_space << '\t' << fb.z
        << '\t' << fb.coboundaries_in_z << '\t';
    if (fb.classes >= 0)
      out << fb.classes;
    else
      out << '-';
    out << '\t';
    bool first = true;
    for (const auto& st : fb.strata) {
      if (!first) out << ';';
      first = false;
      for (std::size_t i = 0; i < st.members.size(); ++i)
        out << (i ? "," : "") << st.members[i];
      out << ':' << st.count;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace parityc
