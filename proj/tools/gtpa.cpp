// Command-line front end. All computation goes through the C API in gtpa.h;
// this file only parses arguments and formats output. Exit codes: 0 success
// or all checks passed, 1 a verification check failed, 2 bad input.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtpa.h"

using nlohmann::json;

namespace {

struct ContextHandle {
  gtpa_context* c = nullptr;
  ~ContextHandle() { gtpa_context_close(c); }
};

struct ElementHandle {
  gtpa_element* e = nullptr;
  ~ElementHandle() { gtpa_element_free(e); }
};

int exit_code(gtpa_status s) { return s == GTPA_ERR_CHECK ? 1 : 2; }

int report_failure(gtpa_status s) {
  std::cerr << "error: " << gtpa_last_error() << "\n";
  return exit_code(s);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gtpa_string_free(s);
  return out;
}

// Machine outputs share one envelope so reruns with equal config and seed
// are byte-identical.
void emit_json(const std::string& command, int max_n, unsigned seed, json result) {
  json out{{"command", command}, {"max_n", max_n}, {"seed", seed},
           {"result", std::move(result)}};
  std::cout << out.dump() << "\n";
}

std::string word_text(const json& letters) {
  std::string out = "(";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ",";
    out += letters[i].get<std::string>();
  }
  return out + ")";
}

int print_element(gtpa_context* c, gtpa_element* e, const std::string& command,
                  const std::string& format, int max_n, unsigned seed) {
  char* s = nullptr;
  if (format == "text") {
    gtpa_status st = gtpa_element_text(c, e, &s);
    if (st != GTPA_OK) return report_failure(st);
    std::cout << take(s) << "\n";
  } else {
    gtpa_status st = gtpa_element_json(c, e, &s);
    if (st != GTPA_OK) return report_failure(st);
    emit_json(command, max_n, seed, json::parse(take(s)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for the group-type planar algebra"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand name

  std::string config_path;
  std::string format = "text";
  int max_n = 3;
  unsigned seed = 0;
  app.add_option("--config", config_path, "context config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--max-n", max_n, "highest level used by table commands")
      ->check(CLI::Range(0, 5));
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for subsampled verification sweeps");

  auto* cmd_dims = app.add_subcommand("dims", "basis dimensions for levels 0..max-n");

  const CLI::Range level_range(0, 5);

  int basis_n = 0;
  auto* cmd_basis = app.add_subcommand("basis", "basis words of one level");
  cmd_basis->add_option("n", basis_n, "level")->required()->check(level_range);

  int mul_n = 0;
  std::string mul_x, mul_y;
  auto* cmd_mul = app.add_subcommand("mul", "product of two basis words");
  cmd_mul->add_option("n", mul_n, "level")->required()->check(level_range);
  cmd_mul->add_option("x", mul_x, "left word, comma-separated names")->required();
  cmd_mul->add_option("y", mul_y, "right word")->required();

  int unary_n = 0;
  std::string unary_word;
  auto* cmd_star = app.add_subcommand("star", "adjoint of a basis word");
  auto* cmd_include = app.add_subcommand("include", "inclusion one level up");
  auto* cmd_er = app.add_subcommand("expect-right", "conditional expectation down");
  auto* cmd_el = app.add_subcommand("expect-left", "expectation onto the right slice");
  auto* cmd_trace = app.add_subcommand("trace", "normalized trace of a basis word");
  for (CLI::App* c : {cmd_star, cmd_include, cmd_er, cmd_el, cmd_trace}) {
    c->add_option("n", unary_n, "level of the input word")->required()->check(level_range);
    c->add_option("word", unary_word, "comma-separated names")->required();
  }

  int jones_n = 1;
  auto* cmd_jones = app.add_subcommand("jones", "Jones tangle value, lands one level up");
  cmd_jones->add_option("n", jones_n, "index")->required()->check(CLI::Range(1, 5));

  int gram_n = 0;
  auto* cmd_gram = app.add_subcommand("gram", "trace inner products of the basis");
  cmd_gram->add_option("n", gram_n, "level")->required()->check(level_range);

  std::string tangle_path;
  std::vector<std::string> tangle_inputs;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a tangle file");
  cmd_eval->add_option("--tangle", tangle_path, "tangle text file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_eval->add_option("--input", tangle_inputs, "disc input as NAME=word");

  auto* cmd_cdims = app.add_subcommand("commutant-dims",
                                       "commutant model dimensions for levels 0..max-n");

  int iso_n = 0;
  auto* cmd_iso = app.add_subcommand("iso-check", "commutant/word model agreement");
  cmd_iso->add_option("n", iso_n, "level")->required()->check(level_range);

  std::string suite;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "tl|assoc|statesum|compose|iso|biproj|all")
      ->required()
      ->check(CLI::IsMember({"tl", "assoc", "statesum", "compose", "iso", "biproj", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ContextHandle ctx;
  if (gtpa_status st = gtpa_context_open_file(config_path.c_str(), &ctx.c); st != GTPA_OK)
    return report_failure(st);

  if (cmd_dims->parsed()) {
    json dims = json::array();
    for (int n = 0; n <= max_n; ++n) {
      long long d = 0;
      if (gtpa_status st = gtpa_dim(ctx.c, n, &d); st != GTPA_OK) return report_failure(st);
      dims.push_back(d);
    }
    if (format == "text") {
      for (int n = 0; n <= max_n; ++n)
        std::cout << n << " " << dims[static_cast<size_t>(n)] << "\n";
    } else {
      emit_json("dims", max_n, seed, json{{"dims", dims}});
    }
    return 0;
  }

  if (cmd_basis->parsed()) {
    char* s = nullptr;
    if (gtpa_status st = gtpa_basis_json(ctx.c, basis_n, &s); st != GTPA_OK)
      return report_failure(st);
    json b = json::parse(take(s));
    if (format == "text") {
      for (const json& w : b["words"]) std::cout << word_text(w) << "\n";
    } else {
      emit_json("basis", max_n, seed, b);
    }
    return 0;
  }

  if (cmd_mul->parsed()) {
    ElementHandle x, y, p;
    if (gtpa_status st = gtpa_word_element(ctx.c, mul_n, mul_x.c_str(), &x.e); st != GTPA_OK)
      return report_failure(st);
    if (gtpa_status st = gtpa_word_element(ctx.c, mul_n, mul_y.c_str(), &y.e); st != GTPA_OK)
      return report_failure(st);
    if (gtpa_status st = gtpa_mul(ctx.c, x.e, y.e, &p.e); st != GTPA_OK)
      return report_failure(st);
    return print_element(ctx.c, p.e, "mul", format, max_n, seed);
  }

  if (cmd_star->parsed() || cmd_include->parsed() || cmd_er->parsed() || cmd_el->parsed() ||
      cmd_trace->parsed()) {
    ElementHandle x;
    if (gtpa_status st = gtpa_word_element(ctx.c, unary_n, unary_word.c_str(), &x.e);
        st != GTPA_OK)
      return report_failure(st);
    if (cmd_trace->parsed()) {
      char* s = nullptr;
      if (gtpa_status st = gtpa_trace(ctx.c, x.e, &s); st != GTPA_OK)
        return report_failure(st);
      std::string text = take(s);
      if (format == "text")
        std::cout << text << "\n";
      else
        emit_json("trace", max_n, seed, json{{"trace", text}});
      return 0;
    }
    ElementHandle out;
    const char* name = "star";
    gtpa_status st = GTPA_OK;
    if (cmd_star->parsed()) {
      st = gtpa_star(ctx.c, x.e, &out.e);
    } else if (cmd_include->parsed()) {
      st = gtpa_include(ctx.c, x.e, &out.e);
      name = "include";
    } else if (cmd_er->parsed()) {
      st = gtpa_expect_right(ctx.c, x.e, &out.e);
      name = "expect-right";
    } else {
      st = gtpa_expect_left(ctx.c, x.e, &out.e);
      name = "expect-left";
    }
    if (st != GTPA_OK) return report_failure(st);
    return print_element(ctx.c, out.e, name, format, max_n, seed);
  }

  if (cmd_jones->parsed()) {
    ElementHandle out;
    if (gtpa_status st = gtpa_jones_element(ctx.c, jones_n, &out.e); st != GTPA_OK)
      return report_failure(st);
    return print_element(ctx.c, out.e, "jones", format, max_n, seed);
  }

  if (cmd_gram->parsed()) {
    char* s = nullptr;
    if (gtpa_status st = gtpa_gram_json(ctx.c, gram_n, &s); st != GTPA_OK)
      return report_failure(st);
    json g = json::parse(take(s));
    if (format == "text") {
      for (const json& row : g["matrix"]) {
        std::string line;
        for (const json& cell : row) {
          if (!line.empty()) line += " | ";
          line += cell["text"].get<std::string>();
        }
        std::cout << line << "\n";
      }
    } else {
      emit_json("gram", max_n, seed, g);
    }
    return 0;
  }

  if (cmd_eval->parsed()) {
    std::ifstream f(tangle_path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    std::vector<std::string> names, words;
    for (const std::string& in : tangle_inputs) {
      size_t eq = in.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: --input expects NAME=word, got '" << in << "'\n";
        return 2;
      }
      names.push_back(in.substr(0, eq));
      words.push_back(in.substr(eq + 1));
    }
    std::vector<const char*> name_ptrs, word_ptrs;
    for (size_t i = 0; i < names.size(); ++i) {
      name_ptrs.push_back(names[i].c_str());
      word_ptrs.push_back(words[i].c_str());
    }
    ElementHandle out;
    if (gtpa_status st = gtpa_eval_tangle(ctx.c, text.c_str(), name_ptrs.data(),
                                          word_ptrs.data(), names.size(), &out.e);
        st != GTPA_OK)
      return report_failure(st);
    return print_element(ctx.c, out.e, "eval", format, max_n, seed);
  }

  if (cmd_cdims->parsed()) {
    char* s = nullptr;
    if (gtpa_status st = gtpa_commutant_dims_json(ctx.c, max_n, &s); st != GTPA_OK)
      return report_failure(st);
    json d = json::parse(take(s));
    if (format == "text") {
      std::cout << "n ncomm mcomm word_model\n";
      for (const json& lvl : d["levels"]) {
        std::cout << lvl["n"] << " " << lvl["ncomm"] << " ";
        if (lvl["mcomm"].is_null())
          std::cout << "-";
        else
          std::cout << lvl["mcomm"];
        std::cout << " " << lvl["word_model"] << "\n";
      }
    } else {
      emit_json("commutant-dims", max_n, seed, d);
    }
    return 0;
  }

  if (cmd_iso->parsed()) {
    char* s = nullptr;
    int pass = 0;
    if (gtpa_status st = gtpa_iso_check_json(ctx.c, iso_n, &s, &pass); st != GTPA_OK)
      return report_failure(st);
    json r = json::parse(take(s));
    if (format == "text") {
      for (const json& c : r["checks"])
        std::cout << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
                  << c["name"].get<std::string>() << "\n";
    } else {
      emit_json("iso-check", max_n, seed, r);
    }
    return pass ? 0 : 1;
  }

  if (cmd_verify->parsed()) {
    char* s = nullptr;
    int pass = 0;
    if (gtpa_status st = gtpa_verify_json(ctx.c, suite.c_str(), max_n, seed, &s, &pass);
        st != GTPA_OK)
      return report_failure(st);
    json r = json::parse(take(s));
    if (format == "text") {
      for (const json& sr : r["suites"])
        for (const json& c : sr["checks"]) {
          std::cout << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
                    << sr["suite"].get<std::string>() << ":" << c["name"].get<std::string>();
          if (!c["pass"].get<bool>())
            std::cout << "  counterexample: " << c["counterexample"].get<std::string>();
          std::cout << "\n";
        }
      std::cout << (pass ? "all checks passed" : "checks FAILED") << "\n";
    } else {
      std::cout << r.dump() << "\n";
    }
    return pass ? 0 : 1;
  }

  std::cerr << "error: no command\n";
  return 2;
}
