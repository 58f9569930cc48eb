#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ajcactus/affine_cactus.hpp"
#include "ajcactus/coxeter_cactus.hpp"
#include "ajcactus/presentations.hpp"
#include "ajcactus/selftest.hpp"
#include "ajcactus/svg.hpp"
#include "ajcactus/wordio.hpp"

namespace {

using namespace ajcactus;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kIoError = 3;

nlohmann::json phi_json(const CactusWord& w) {
  SemidirectElement img = phi(w);
  img.diagram = normal_form(img.diagram);
  return sd_to_json(img);
}

int run_reduce(int n, const std::string& text, bool json) {
  const CactusWord reduced = lift_reduce(parse_cactus_word(text, n));
  if (json) {
    nlohmann::json out = {{"word", word_to_json(reduced)}, {"text", to_string(reduced)}, {"phi", phi_json(reduced)}};
    std::cout << out.dump(2) << "\n";
  } else if (!reduced.empty()) {
    std::cout << to_string(reduced) << "\n";
  }
  return kTrue;
}

int run_equal(int n, const std::string& t1, const std::string& t2, bool json) {
  const bool eq = equal_words(parse_cactus_word(t1, n), parse_cactus_word(t2, n));
  if (json)
    std::cout << nlohmann::json{{"equal", eq}}.dump(2) << "\n";
  else
    std::cout << (eq ? "equal" : "not equal") << "\n";
  return eq ? kTrue : kFalse;
}

int run_order(int n, const std::string& text, bool json) {
  const auto k = order(parse_cactus_word(text, n));
  if (json) {
    nlohmann::json out = k ? nlohmann::json{{"order", *k}} : nlohmann::json{{"order", "infinite"}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (k ? std::to_string(*k) : std::string("infinite")) << "\n";
  }
  return kTrue;
}

int run_perm(int n, const std::string& text, bool json) {
  const Permutation s = pi(parse_cactus_word(text, n));
  if (json)
    std::cout << nlohmann::json{{"perm", perm_to_json(s)}}.dump(2) << "\n";
  else
    std::cout << to_string(s) << "\n";
  return kTrue;
}

int run_pure(int n, const std::string& text, bool json) {
  const bool pure = is_pure(parse_cactus_word(text, n));
  if (json)
    std::cout << nlohmann::json{{"pure", pure}}.dump(2) << "\n";
  else
    std::cout << (pure ? "pure" : "not pure") << "\n";
  return pure ? kTrue : kFalse;
}

int run_phi(int n, const std::string& text, bool json) {
  const CactusWord w = parse_cactus_word(text, n);
  if (json) {
    std::cout << phi_json(w).dump(2) << "\n";
    return kTrue;
  }
  const SemidirectElement img = phi(w);
  LiftLetters& reg = lift_letters(n);
  std::cout << "diagram:";
  for (const int g : img.diagram.letters) std::cout << ' ' << reg.name(g);
  std::cout << "\nperm: " << to_string(img.perm) << "\n";
  return kTrue;
}

int run_rotate(int n, int by, const std::string& text, bool json) {
  const CactusWord w = rotate(parse_cactus_word(text, n), by);
  if (json)
    std::cout << word_to_json(w).dump(2) << "\n";
  else if (!w.empty())
    std::cout << to_string(w) << "\n";
  return kTrue;
}

int run_split(int n, int p, const std::string& text, bool json) {
  const auto [kernel, image] = split(parse_cactus_word(text, n), p);
  if (json) {
    std::cout << nlohmann::json{{"kernel", word_to_json(kernel)}, {"image", word_to_json(image)}}.dump(2)
              << "\n";
  } else {
    std::cout << "kernel: " << to_string(kernel) << "\n";
    std::cout << "image: " << to_string(image) << "\n";
  }
  return kTrue;
}

int run_rep(int n, const std::string& out_path) {
  const AjRep rep(n);
  nlohmann::json gens = nlohmann::json::array();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const IntMatrix m = rep.letter_matrix(CactusLetter{i, j});
      nlohmann::json data = nlohmann::json::array();
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c).get_str());
      gens.push_back({{"i", i}, {"j", j}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", data}});
    }
  }
  const nlohmann::json out = {{"n", n}, {"dimension", rep.letter_matrix_dimension()}, {"generators", gens}};
  if (out_path.empty()) {
    std::cout << out.dump(2) << "\n";
    return kTrue;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return kIoError;
  }
  file << out.dump(2) << "\n";
  return file.good() ? kTrue : kIoError;
}

int run_iso_check(int n, bool json) {
  const IsoCertificate cert = iso_check(n);
  if (json) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [arc, letter] : cert.table)
      table.push_back({{"arc", {{"start", arc.start}, {"length", arc.length}}}, {"letter", {letter.i, letter.j}}});
    std::cout << nlohmann::json{{"ok", cert.ok}, {"table", table}, {"mismatch", cert.mismatch}}.dump(2)
              << "\n";
  } else {
    for (const auto& [arc, letter] : cert.table)
      std::cout << to_string(arc) << " <-> " << to_string(letter) << "\n";
    std::cout << (cert.ok ? "ok" : "mismatch: " + cert.mismatch) << "\n";
  }
  return cert.ok ? kTrue : kFalse;
}

int run_diagram(int n, const std::string& text, const std::string& out_path) {
  const std::string svg = render_cactus_svg(parse_cactus_word(text, n));
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return kIoError;
  }
  file << svg;
  file.close();
  return file.good() ? kTrue : kIoError;
}

int run_presentation(int n, const std::string& kind, const std::string& format, int min_size, bool json) {
  TextPresentation p;
  if (kind == "ajn")
    p = presentation_ajn(n);
  else if (kind == "adn")
    p = presentation_adn(n, min_size);
  else if (kind == "jn")
    p = presentation_jn(n);
  else if (kind == "dn")
    p = presentation_dn(n);
  else if (kind == "coxeter-cactus")
    p = presentation_coxeter_cactus(n);
  else {
    std::cerr << "error: unknown presentation kind '" << kind << "'\n";
    return kInputError;
  }
  if (json)
    std::cout << presentation_to_json(p).dump(2) << "\n";
  else if (format == "plain")
    std::cout << format_plain(p);
  else if (format == "algebra")
    std::cout << format_algebra(p);
  else {
    std::cerr << "error: unknown format '" << format << "'\n";
    return kInputError;
  }
  return kTrue;
}

int run_selftest(const std::string& level) {
  if (level != "quick" && level != "full") {
    std::cerr << "error: selftest level must be quick or full\n";
    return kInputError;
  }
  const auto results =
      run_acceptance_checks(level == "full" ? SelftestLevel::kFull : SelftestLevel::kQuick);
  bool all = true;
  for (const CheckResult& r : results) {
    all = all && r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " -- " << r.detail << "\n";
  }
  std::cout << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine cactus group calculator"};
  app.require_subcommand(1);

  int n = 2, by = 1, p = 2, min_size = 2;
  std::string word, word2, out_path, format = "plain", kind, level = "quick";
  bool json = false;
  int exit_code = kTrue;

  const auto add_common = [&](CLI::App* cmd, bool with_word) {
    cmd->add_option("--n", n, "strand count")->required();
    if (with_word) cmd->add_option("word", word, "word in the s(i,j) grammar");
    cmd->add_flag("--json", json, "JSON output");
    return cmd;
  };

  auto* reduce = add_common(app.add_subcommand("reduce", "rewrite to a word with geodesic diagram image"), true);
  reduce->callback([&] { exit_code = run_reduce(n, word, json); });

  auto* equal_cmd = app.add_subcommand("equal", "decide equality of two words");
  equal_cmd->add_option("--n", n)->required();
  equal_cmd->add_option("word1", word)->required();
  equal_cmd->add_option("word2", word2)->required();
  equal_cmd->add_flag("--json", json);
  equal_cmd->callback([&] { exit_code = run_equal(n, word, word2, json); });

  auto* order_cmd = add_common(app.add_subcommand("order", "order of the element (or infinite)"), true);
  order_cmd->callback([&] { exit_code = run_order(n, word, json); });

  auto* perm_cmd = add_common(app.add_subcommand("perm", "permutation image under pi"), true);
  perm_cmd->callback([&] { exit_code = run_perm(n, word, json); });

  auto* pure_cmd = add_common(app.add_subcommand("pure", "test membership in the pure subgroup"), true);
  pure_cmd->callback([&] { exit_code = run_pure(n, word, json); });

  auto* phi_cmd = add_common(app.add_subcommand("phi", "semidirect image (diagram word and permutation)"), true);
  phi_cmd->callback([&] { exit_code = run_phi(n, word, json); });

  auto* rotate_cmd = add_common(app.add_subcommand("rotate", "apply the index-shift automorphism"), true);
  rotate_cmd->add_option("--by", by, "shift amount (default 1)");
  rotate_cmd->callback([&] { exit_code = run_rotate(n, by, word, json); });

  auto* split_cmd = add_common(app.add_subcommand("split", "kernel/image factors of the p-splitting"), true);
  split_cmd->add_option("--p", p, "support-size threshold")->required();
  split_cmd->callback([&] { exit_code = run_split(n, p, word, json); });

  auto* rep_cmd = app.add_subcommand("rep", "emit the faithful integer representation as JSON");
  rep_cmd->add_option("--n", n)->required();
  rep_cmd->add_option("--out", out_path, "output file (stdout when omitted)");
  rep_cmd->callback([&] { exit_code = run_rep(n, out_path); });

  auto* iso_cmd = app.add_subcommand("iso-check", "verify AJ_n against the generalized cactus presentation");
  iso_cmd->add_option("--n", n)->required();
  iso_cmd->add_flag("--json", json);
  iso_cmd->callback([&] { exit_code = run_iso_check(n, json); });

  auto* diagram_cmd = app.add_subcommand("diagram", "render the word as an SVG cylinder diagram");
  diagram_cmd->add_option("--n", n)->required();
  diagram_cmd->add_option("word", word);
  diagram_cmd->add_option("--out", out_path, "output SVG path")->required();
  diagram_cmd->callback([&] { exit_code = run_diagram(n, word, out_path); });

  auto* pres_cmd = app.add_subcommand("presentation", "export a presentation");
  pres_cmd->add_option("--n", n)->required();
  pres_cmd->add_option("kind", kind, "ajn | adn | jn | dn | coxeter-cactus")->required();
  pres_cmd->add_option("--format", format, "plain | algebra");
  pres_cmd->add_option("--min-size", min_size, "minimum generator support (adn)");
  pres_cmd->add_flag("--json", json);
  pres_cmd->callback([&] { exit_code = run_presentation(n, kind, format, min_size, json); });

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance checks");
  selftest_cmd->add_option("level", level, "quick | full");
  selftest_cmd->callback([&] { exit_code = run_selftest(level); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kTrue : kInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return exit_code;
}
