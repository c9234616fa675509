#include "torusmaps/commands.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "torusmaps/characteristics.hpp"
#include "torusmaps/glz_classify.hpp"
#include "torusmaps/torus_dynamics.hpp"
#include "torusmaps/verification.hpp"

namespace torusmaps {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

json characteristic_json(const CompleteCharacteristic& k) {
  json orbits = json::array();
  for (const auto& o : k.orbits) orbits.push_back({o.n_i.get_str(), o.d_i.get_str()});
  return json{{"n", k.n.get_str()}, {"p", k.p.get_str()}, {"orbits", orbits}};
}

json point_json(const Vec2Q& pt) { return json::array({rat_str(pt.x), rat_str(pt.y)}); }

std::string point_str(const Vec2Q& pt) {
  return "(" + rat_str(pt.x) + "," + rat_str(pt.y) + ")";
}

json report_skeleton(const std::string& command) {
  return json{{"schema", 1}, {"command", command}, {"inputs", json::object()},
              {"results", json::object()}, {"diagnostics", json::array()}};
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.json.dump(2) + "\n";
  return report.text;
}

Mat2 parse_matrix(const std::string& csv) {
  const auto parts = split(csv, ',');
  if (parts.size() != 4)
    throw ParseError("matrix must be four comma-separated integers a,b,c,d: '" + csv + "'");
  try {
    return Mat2{Int(parts[0]), Int(parts[1]), Int(parts[2]), Int(parts[3])};
  } catch (const std::invalid_argument&) {
    throw ParseError("matrix entries must be integers: '" + csv + "'");
  }
}

Vec2Q parse_translation(const std::string& csv) {
  const auto parts = split(csv, ',');
  if (parts.size() != 2)
    throw ParseError("translation must be two comma-separated rationals: '" + csv + "'");
  try {
    return Vec2Q{parse_rat(parts[0]), parse_rat(parts[1])};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad translation: ") + e.what());
  }
}

Report cmd_classify(const std::string& matrix, const std::string& translation) {
  const Mat2 A = parse_matrix(matrix);
  const Vec2Q v_in = parse_translation(translation);

  Report rep;
  rep.json = report_skeleton("classify");
  rep.json["inputs"]["matrix"] = matrix;
  rep.json["inputs"]["translation"] = translation;

  std::ostringstream os;
  os << "classify matrix=" << mat_str(A) << " translation=" << point_str(v_in) << "\n";

  const Int D = det(A);
  const Int t = trace(A);
  rep.json["results"]["det"] = D.get_str();
  rep.json["results"]["trace"] = t.get_str();
  os << "  det = " << D.get_str() << ", trace = " << t.get_str() << "\n";

  if (D != 1 && D != -1) {
    rep.json["results"]["unimodular"] = false;
    rep.json["diagnostics"].push_back("matrix is not unimodular: it does not induce a torus automorphism");
    os << "  not unimodular: no induced torus automorphism\n";
    rep.text = os.str();
    return rep;
  }
  rep.json["results"]["unimodular"] = true;

  const bool unit_spectrum = has_unit_modulus_spectrum(A);
  rep.json["results"]["unit_modulus_spectrum"] = unit_spectrum;
  if (unit_spectrum) {
    const auto cls = batterson_class(A);
    rep.json["results"]["similarity_class"] = to_string(cls);
    os << "  similarity class: " << to_string(cls) << "\n";
  } else {
    rep.json["results"]["similarity_class"] = nullptr;
    rep.json["diagnostics"].push_back("hyperbolic spectrum: no finite-order similarity class");
    os << "  similarity class: none (hyperbolic spectrum)\n";
  }

  const AffineTorusMap f(A, v_in);
  const auto period = map_period(f);
  if (period) {
    rep.json["results"]["period"] = period->get_str();
    os << "  period: " << period->get_str() << "\n";
  } else {
    rep.json["results"]["period"] = nullptr;
    os << "  period: none (non-periodic)\n";
  }

  const bool homotopic_id = A == Mat2::identity();
  rep.json["results"]["homotopic_to_identity"] = homotopic_id;
  os << "  homotopic to identity: " << (homotopic_id ? "yes" : "no") << "\n";

  const auto matrix_class = oriented_class(A);
  rep.json["results"]["oriented_class"] = to_string(matrix_class);
  os << "  oriented class: " << to_string(matrix_class) << "\n";

  if (D == -1) {
    rep.json["diagnostics"].push_back("orientation-reversing: out of classification scope");
    os << "  orientation-reversing: out of classification scope\n";
    rep.text = os.str();
    return rep;
  }

  if (period) {
    const auto kappa = complete_characteristic(f);
    rep.json["results"]["characteristic"] = characteristic_json(kappa);
    const auto idx = canonical_index(kappa);
    rep.json["results"]["characteristic_index"] = idx ? json(*idx) : json(nullptr);
    os << "  characteristic: " << to_string(kappa);
    if (idx) os << "   [kappa_" << *idx << "]";
    if (kappa.orbits.empty()) os << "   [free]";
    os << "\n";

    json orbits = json::array();
    const auto bset = lower_period_set(f);
    for (const auto& o : bset.orbits) {
      json jo{{"n_i", o.n_i.get_str()},
              {"lambda", o.lambda.get_str()},
              {"delta", o.delta.get_str()},
              {"d", o.d.get_str()}};
      json pts = json::array();
      os << "  orbit n_i=" << o.n_i.get_str() << " lambda=" << o.lambda.get_str()
         << " delta=" << o.delta.get_str() << " d=" << o.d.get_str() << " points:";
      for (const auto& pt : o.points) {
        pts.push_back(point_json(pt));
        os << " " << point_str(pt);
      }
      os << "\n";
      jo["points"] = pts;
      orbits.push_back(jo);
    }
    rep.json["results"]["orbits"] = orbits;
  } else {
    rep.json["results"]["characteristic"] = nullptr;
    rep.json["diagnostics"].push_back("non-periodic: no complete characteristic");
    os << "  non-periodic: no complete characteristic\n";
  }

  rep.text = os.str();
  return rep;
}

Report cmd_enumerate(long genus, long max_period, long max_orbits, bool include_free) {
  if (genus < 0) throw ParseError("genus must be non-negative");
  if (max_period < 1) throw ParseError("max period must be positive");
  if (max_orbits < 0) throw ParseError("max orbits must be non-negative");

  std::vector<CompleteCharacteristic> list;
  if (include_free) {
    auto frees = enumerate_general(genus, max_period, 0);
    list.insert(list.end(), frees.begin(), frees.end());
  }
  if (max_orbits >= 1) {
    if (genus == 1) {
      for (const auto& k : enumerate_torus_nonfree())
        if (k.n <= max_period && static_cast<long>(k.orbits.size()) <= max_orbits)
          list.push_back(k);
    } else {
      for (const auto& k : enumerate_general(genus, max_period, max_orbits))
        if (!k.orbits.empty()) list.push_back(k);
    }
  }
  std::sort(list.begin(), list.end());

  Report rep;
  rep.json = report_skeleton("enumerate");
  rep.json["inputs"] = {{"genus", genus},
                        {"max_period", max_period},
                        {"max_orbits", max_orbits},
                        {"include_free", include_free}};
  rep.json["results"]["count"] = list.size();
  json arr = json::array();
  std::ostringstream os;
  os << "enumerate genus=" << genus << " max_period=" << max_period
     << " max_orbits=" << max_orbits << (include_free ? " include-free" : "") << "\n";
  for (const auto& k : list) {
    json item = characteristic_json(k);
    const auto idx = canonical_index(k);
    if (genus == 1) item["canonical_index"] = idx ? json(*idx) : json(nullptr);
    arr.push_back(item);
    os << "  " << to_string(k);
    if (genus == 1 && idx) os << "   [kappa_" << *idx << "]";
    os << "\n";
  }
  rep.json["results"]["characteristics"] = arr;
  os << "  total: " << list.size() << "\n";
  rep.text = os.str();
  return rep;
}

Report cmd_conjugate(const std::string& matrix1, const std::string& translation1,
                     const std::string& matrix2, const std::string& translation2) {
  Report rep;
  rep.json = report_skeleton("conjugate");
  rep.json["inputs"] = {{"matrix1", matrix1},
                        {"translation1", translation1},
                        {"matrix2", matrix2},
                        {"translation2", translation2}};
  std::ostringstream os;
  os << "conjugate (" << matrix1 << "; " << translation1 << ") vs (" << matrix2 << "; "
     << translation2 << ")\n";

  const Mat2 A1 = parse_matrix(matrix1);
  const Mat2 A2 = parse_matrix(matrix2);
  const Vec2Q v1 = parse_translation(translation1);
  const Vec2Q v2 = parse_translation(translation2);

  try {
    const AffineTorusMap f(A1, v1), g(A2, v2);
    const auto verdict = conjugate_test(f, g);
    rep.json["results"]["conjugate"] = verdict.conjugate;
    rep.json["results"]["reason"] = verdict.reason;
    os << "  " << (verdict.conjugate ? "conjugate" : "not conjugate") << ": "
       << verdict.reason << "\n";
  } catch (const std::domain_error& e) {
    rep.json["results"]["conjugate"] = nullptr;
    rep.json["results"]["reason"] = e.what();
    rep.json["diagnostics"].push_back(e.what());
    os << "  undecided: " << e.what() << "\n";
  }
  rep.text = os.str();
  return rep;
}

Report cmd_verify() {
  const auto results = run_verification();
  const bool ok = all_passed(results);

  Report rep;
  rep.json = report_skeleton("verify");
  rep.json["results"]["all_passed"] = ok;
  json checks = json::array();
  std::ostringstream os;
  os << "verify\n";
  int passed = 0;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    os << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << ": " << r.detail
       << "\n";
    if (r.pass) ++passed;
  }
  rep.json["results"]["checks"] = checks;
  os << "  " << passed << "/" << results.size() << " checks passed\n";
  rep.text = os.str();
  rep.exit_code = ok ? 0 : 1;
  return rep;
}

}  // namespace torusmaps
