#include "gtpa.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "commutants.hpp"
#include "config.hpp"
#include "error.hpp"
#include "statesum.hpp"
#include "tangle.hpp"
#include "verify.hpp"

using nlohmann::json;

struct gtpa_context {
  gtpa::GroupContext ctx;
};

struct gtpa_element {
  gtpa::Element el;
};

namespace {

thread_local std::string g_last_error;

gtpa_status status_of(gtpa::errc k) {
  switch (k) {
    case gtpa::errc::argument: return GTPA_ERR_ARGUMENT;
    case gtpa::errc::parse: return GTPA_ERR_PARSE;
    case gtpa::errc::domain: return GTPA_ERR_DOMAIN;
    case gtpa::errc::check: return GTPA_ERR_CHECK;
    case gtpa::errc::internal: return GTPA_ERR_INTERNAL;
  }
  return GTPA_ERR_INTERNAL;
}

template <typename F>
gtpa_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return GTPA_OK;
  } catch (const gtpa::error& e) {
    g_last_error = e.what();
    return status_of(e.kind);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GTPA_ERR_INTERNAL;
  }
}

[[noreturn]] void bad_arg(const char* what) { gtpa::fail(gtpa::errc::argument, what); }

void need(const void* p, const char* what) {
  if (!p) bad_arg(what);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

json scalar_json(const gtpa::Scalar& c) {
  auto a = c.coeff_strings();
  return json{{"c0", a[0]}, {"c1", a[1]}, {"c2", a[2]}, {"c3", a[3]}};
}

json word_json(const gtpa::GroupContext& ctx, const gtpa::Word& w, int start = 0) {
  json names = json::array();
  for (size_t i = 0; i < w.size(); ++i)
    names.push_back(ctx.L(static_cast<long>(i) + start).name(w[i]));
  return names;
}

json element_json(const gtpa::GroupContext& ctx, const gtpa::Element& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms)
    terms.push_back(json{{"coeff", scalar_json(c)}, {"word", word_json(ctx, w)}});
  return json{{"level", x.level}, {"terms", terms}};
}

json report_json(const gtpa::SuiteReport& r) {
  json checks = json::array();
  for (const gtpa::CheckResult& c : r.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) entry["counterexample"] = c.counterexample;
    checks.push_back(std::move(entry));
  }
  return json{{"suite", r.suite}, {"max_n", r.max_n}, {"seed", r.seed},
              {"pass", r.pass},   {"checks", checks}};
}

}  // namespace

extern "C" {

const char* gtpa_last_error(void) { return g_last_error.c_str(); }

void gtpa_string_free(char* s) { std::free(s); }

gtpa_status gtpa_context_open(const char* config_json, gtpa_context** out) {
  return guard([&] {
    need(config_json, "null config");
    need(out, "null out");
    *out = new gtpa_context{gtpa::load_context_json(config_json)};
  });
}

gtpa_status gtpa_context_open_file(const char* path, gtpa_context** out) {
  return guard([&] {
    need(path, "null path");
    need(out, "null out");
    *out = new gtpa_context{gtpa::load_context_file(path)};
  });
}

void gtpa_context_close(gtpa_context* ctx) { delete ctx; }

gtpa_status gtpa_context_orders(const gtpa_context* ctx, int* h_order, int* k_order) {
  return guard([&] {
    need(ctx, "null context");
    if (h_order) *h_order = ctx->ctx.H.order;
    if (k_order) *k_order = ctx->ctx.K.order;
  });
}

gtpa_status gtpa_dim(const gtpa_context* ctx, int n, long long* out) {
  return guard([&] {
    need(ctx, "null context");
    need(out, "null out");
    *out = static_cast<long long>(ctx->ctx.dim(n));
  });
}

gtpa_status gtpa_basis_json(const gtpa_context* ctx, int n, char** out) {
  return guard([&] {
    need(ctx, "null context");
    need(out, "null out");
    json words = json::array();
    for (const gtpa::Word& w : ctx->ctx.enumerate_basis(n))
      words.push_back(word_json(ctx->ctx, w));
    *out = dup_string(json{{"level", n}, {"words", words}}.dump());
  });
}

gtpa_status gtpa_word_element(const gtpa_context* ctx, int n, const char* word,
                              gtpa_element** out) {
  return guard([&] {
    need(ctx, "null context");
    need(word, "null word");
    need(out, "null out");
    gtpa::Word w = ctx->ctx.parse_word(word, 2 * n);
    *out = new gtpa_element{gtpa::word_element(ctx->ctx, n, w)};
  });
}

gtpa_status gtpa_identity_element(const gtpa_context* ctx, int n, gtpa_element** out) {
  return guard([&] {
    need(ctx, "null context");
    need(out, "null out");
    *out = new gtpa_element{gtpa::identity_element(ctx->ctx, n)};
  });
}

gtpa_status gtpa_jones_element(const gtpa_context* ctx, int n, gtpa_element** out) {
  return guard([&] {
    need(ctx, "null context");
    need(out, "null out");
    *out = new gtpa_element{gtpa::jones_element(ctx->ctx, n)};
  });
}

#define GTPA_UNARY(fn, impl)                                                        \
  gtpa_status fn(const gtpa_context* ctx, const gtpa_element* x, gtpa_element** out) { \
    return guard([&] {                                                              \
      need(ctx, "null context");                                                    \
      need(x, "null element");                                                      \
      need(out, "null out");                                                        \
      *out = new gtpa_element{gtpa::impl(ctx->ctx, x->el)};                         \
    });                                                                             \
  }

GTPA_UNARY(gtpa_star, star)
GTPA_UNARY(gtpa_include, include)
GTPA_UNARY(gtpa_expect_right, cond_exp_right)
GTPA_UNARY(gtpa_expect_left, cond_exp_left)

#undef GTPA_UNARY

gtpa_status gtpa_mul(const gtpa_context* ctx, const gtpa_element* x,
                     const gtpa_element* y, gtpa_element** out) {
  return guard([&] {
    need(ctx, "null context");
    need(x, "null element");
    need(y, "null element");
    need(out, "null out");
    *out = new gtpa_element{gtpa::mul(ctx->ctx, x->el, y->el)};
  });
}

gtpa_status gtpa_element_level(const gtpa_element* x, int* out) {
  return guard([&] {
    need(x, "null element");
    need(out, "null out");
    *out = x->el.level;
  });
}

gtpa_status gtpa_trace(const gtpa_context* ctx, const gtpa_element* x, char** out) {
  return guard([&] {
    need(ctx, "null context");
    need(x, "null element");
    need(out, "null out");
    *out = dup_string(gtpa::trace(ctx->ctx, x->el).text());
  });
}

gtpa_status gtpa_element_text(const gtpa_context* ctx, const gtpa_element* x, char** out) {
  return guard([&] {
    need(ctx, "null context");
    need(x, "null element");
    need(out, "null out");
    *out = dup_string(gtpa::render_element(ctx->ctx, x->el));
  });
}

gtpa_status gtpa_element_json(const gtpa_context* ctx, const gtpa_element* x, char** out) {
  return guard([&] {
    need(ctx, "null context");
    need(x, "null element");
    need(out, "null out");
    *out = dup_string(element_json(ctx->ctx, x->el).dump());
  });
}

void gtpa_element_free(gtpa_element* x) { delete x; }

gtpa_status gtpa_gram_json(const gtpa_context* ctx, int n, char** out) {
  return guard([&] {
    need(ctx, "null context");
    need(out, "null out");
    const gtpa::GroupContext& c = ctx->ctx;
    std::vector<gtpa::Element> basis;
    for (const gtpa::Word& w : c.enumerate_basis(n))
      basis.push_back(gtpa::Element{n, {{w, gtpa::Scalar(1)}}});
    json rows = json::array();
    for (const gtpa::Element& x : basis) {
      json row = json::array();
      for (const gtpa::Element& y : basis) {
        gtpa::Scalar v = gtpa::inner(c, x, y);
        json cell = scalar_json(v);
        cell["text"] = v.text();
        row.push_back(std::move(cell));
      }
      rows.push_back(std::move(row));
    }
    *out = dup_string(json{{"level", n}, {"matrix", rows}}.dump());
  });
}

gtpa_status gtpa_commutant_dims_json(const gtpa_context* ctx, int max_n, char** out) {
  return guard([&] {
    need(ctx, "null context");
    need(out, "null out");
    if (max_n < 0) bad_arg("max_n must be nonnegative");
    json levels = json::array();
    for (int n = 0; n <= max_n; ++n) {
      json entry{{"n", n},
                 {"ncomm", gtpa::ncomm_basis(ctx->ctx, n).size()},
                 {"word_model", ctx->ctx.enumerate_basis(n + 1).size()}};
      if (n >= 1)
        entry["mcomm"] = gtpa::mcomm_basis(ctx->ctx, n).size();
      else
        entry["mcomm"] = nullptr;
      levels.push_back(std::move(entry));
    }
    *out = dup_string(json{{"max_n", max_n}, {"levels", levels}}.dump());
  });
}

gtpa_status gtpa_iso_check_json(const gtpa_context* ctx, int n, char** out, int* pass) {
  return guard([&] {
    need(ctx, "null context");
    need(out, "null out");
    json checks = json::array();
    bool all = true;
    for (const auto& [name, ok] : gtpa::verify_iso(ctx->ctx, n)) {
      checks.push_back(json{{"name", name}, {"pass", ok}});
      all = all && ok;
    }
    *out = dup_string(json{{"level", n}, {"pass", all}, {"checks", checks}}.dump());
    if (pass) *pass = all ? 1 : 0;
  });
}

gtpa_status gtpa_eval_tangle(const gtpa_context* ctx, const char* tangle_text,
                             const char* const* disc_names, const char* const* disc_words,
                             size_t inputs, gtpa_element** out) {
  return guard([&] {
    need(ctx, "null context");
    need(tangle_text, "null tangle");
    need(out, "null out");
    if (inputs > 0) {
      need(disc_names, "null disc names");
      need(disc_words, "null disc words");
    }
    const gtpa::GroupContext& c = ctx->ctx;
    gtpa::Tangle t = gtpa::parse_tangle(tangle_text);
    gtpa::validate_tangle(t);
    std::vector<gtpa::Element> els(static_cast<size_t>(t.num_discs()));
    std::vector<bool> given(els.size(), false);
    for (size_t i = 0; i < inputs; ++i) {
      need(disc_names[i], "null disc name");
      need(disc_words[i], "null disc word");
      int d = t.disc_index(disc_names[i]);
      int color = t.disc_row(d).color;
      gtpa::Word w = c.parse_word(disc_words[i], 2 * color);
      els[static_cast<size_t>(d)] = gtpa::word_element(c, color, w);
      given[static_cast<size_t>(d)] = true;
    }
    for (size_t d = 0; d < els.size(); ++d)
      if (!given[d])
        gtpa::fail(gtpa::errc::argument,
                   "no input for disc " + t.disc_names[d]);
    *out = new gtpa_element{gtpa::evaluate(c, t, els)};
  });
}

gtpa_status gtpa_verify_json(const gtpa_context* ctx, const char* suite, int max_n,
                             unsigned seed, char** out, int* pass) {
  return guard([&] {
    need(ctx, "null context");
    need(suite, "null suite");
    need(out, "null out");
    std::vector<std::string> todo;
    if (std::string(suite) == "all")
      todo = gtpa::suite_names();
    else
      todo.push_back(suite);
    json suites = json::array();
    bool all = true;
    for (const std::string& s : todo) {
      gtpa::SuiteReport r = gtpa::run_suite(ctx->ctx, s, max_n, seed);
      all = all && r.pass;
      suites.push_back(report_json(r));
    }
    *out = dup_string(
        json{{"command", "verify"}, {"max_n", max_n}, {"seed", seed},
             {"pass", all},         {"suites", suites}}
            .dump());
    if (pass) *pass = all ? 1 : 0;
  });
}

}  // extern "C"
