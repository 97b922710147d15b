// Copyright 2026 The qcat Authors
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

#include "qcat/qcat.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcat/core/commands.hpp"
#include "qcat/core/errors.hpp"

struct qcat_document {
  qcat::Document doc;
  std::string source;
  std::string kind;
};

struct qcat_report {
  qcat::RunReport report;
};

namespace {

thread_local std::string last_error;

qcat_status fail(qcat_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
qcat_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const qcat::StructuralError& e) {
    return fail(QCAT_ERR_STRUCTURE, e.what());
  } catch (const qcat::UsageError& e) {
    return fail(QCAT_ERR_USAGE, e.what());
  } catch (const qcat::PreconditionError& e) {
    return fail(QCAT_ERR_PRECONDITION, e.what());
  } catch (const qcat::BoundExceeded& e) {
    return fail(QCAT_ERR_BOUND, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QCAT_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(QCAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QCAT_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qcat_document* wrap(qcat::Document d, std::string source) {
  auto* h = new qcat_document{std::move(d), std::move(source), {}};
  h->kind = qcat::to_string(h->doc.kind());
  return h;
}

qcat::Rational flag_rational(const char* text, const char* flag) {
  try {
    return qcat::parse_rational(text);
  } catch (const qcat::StructuralError&) {
    throw std::invalid_argument(std::string("--") + flag + " expects a rational such as 1/2, got \"" + text + "\"");
  }
}

}  // namespace

extern "C" {

void qcat_options_init(qcat_options* options) {
  if (options) *options = qcat_options{nullptr, 0, nullptr, nullptr, nullptr, 0, 0};
}

const char* qcat_version(void) { return "0.1.0"; }

const char* qcat_last_error(void) { return last_error.c_str(); }

const char* qcat_status_name(qcat_status status) {
  switch (status) {
    case QCAT_OK:
      return "ok";
    case QCAT_NEGATIVE:
      return "negative";
    case QCAT_ERR_STRUCTURE:
      return "structural error";
    case QCAT_ERR_USAGE:
      return "usage error";
    case QCAT_ERR_PRECONDITION:
      return "precondition violated";
    case QCAT_ERR_BOUND:
      return "bound exceeded";
    case QCAT_ERR_INTERNAL:
      return "internal error";
    case QCAT_ERR_ARGUMENT:
      return "invalid argument";
  }
  return "unknown status";
}

qcat_status qcat_document_parse(const char* text, size_t length, qcat_document** out) {
  if (!text || !out) return fail(QCAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = wrap(qcat::parse_document(std::string_view(text, length)), "<text>");
    return QCAT_OK;
  });
}

qcat_status qcat_document_load(const char* path, qcat_document** out) {
  if (!path || !out) return fail(QCAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string p(path);
    if (!std::filesystem::exists(p)) {
      if (qcat::is_fixture_name(p)) {
        *out = wrap(qcat::fixture_document(p), p);
        return QCAT_OK;
      }
      throw qcat::UsageError("cannot open \"" + p + "\"");
    }
    std::ifstream in(p, std::ios::binary);
    if (!in) throw qcat::UsageError("cannot read \"" + p + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      *out = wrap(qcat::parse_document(buf.str()), p);
    } catch (const qcat::StructuralError& e) {
      throw qcat::StructuralError(p + ": " + e.what());
    }
    return QCAT_OK;
  });
}

qcat_status qcat_document_emit(const qcat_document* doc, char** out) {
  if (!doc || !out) return fail(QCAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(qcat::emit_document(doc->doc));
    return QCAT_OK;
  });
}

const char* qcat_document_kind(const qcat_document* doc) { return doc ? doc->kind.c_str() : ""; }
const char* qcat_document_name(const qcat_document* doc) { return doc ? doc->doc.name.c_str() : ""; }
const char* qcat_document_source(const qcat_document* doc) { return doc ? doc->source.c_str() : ""; }
void qcat_document_free(qcat_document* doc) { delete doc; }

qcat_status qcat_fixture(const char* name, qcat_document** out) {
  if (!name || !out) return fail(QCAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = wrap(qcat::fixture_document(name), name);
    return QCAT_OK;
  });
}

size_t qcat_fixture_count(void) { return qcat::fixture_document_names().size(); }

const char* qcat_fixture_name(size_t index) {
  static const std::vector<std::string> names = qcat::fixture_document_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

size_t qcat_command_count(void) { return qcat::command_names().size(); }

const char* qcat_command_name(size_t index) {
  const auto& names = qcat::command_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

qcat_status qcat_run(const char* command, const qcat_document* const* inputs, size_t input_count,
                     const qcat_options* options, qcat_report** out) {
  if (!command || !out || (input_count && !inputs)) return fail(QCAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<qcat::NamedDocument> docs;
    for (size_t i = 0; i < input_count; ++i) {
      if (!inputs[i]) throw std::invalid_argument("null input document");
      docs.push_back({inputs[i]->source, inputs[i]->doc});
    }
    qcat::RunOptions o;
    if (options) {
      for (size_t i = 0; i < options->set_count; ++i)
        if (options->sets[i]) o.sets.emplace_back(options->sets[i]);
      if (options->step) o.step = flag_rational(options->step, "step");
      if (options->cap) o.cap = flag_rational(options->cap, "cap");
      if (options->eps) o.eps = flag_rational(options->eps, "eps");
      if (options->bound) o.bound = options->bound;
      if (options->horizon) o.horizon = options->horizon;
    }
    auto* r = new qcat_report{qcat::run_command(command, docs, o)};
    *out = r;
    return r->report.exit_code() == 0 ? QCAT_OK : QCAT_NEGATIVE;
  });
}

int qcat_report_positive(const qcat_report* report) { return report && report->report.exit_code() == 0; }
int qcat_report_exit_code(const qcat_report* report) { return report ? report->report.exit_code() : 2; }

qcat_status qcat_report_json(const qcat_report* report, char** out) {
  if (!report || !out) return fail(QCAT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(qcat::report_json(report->report));
    return QCAT_OK;
  });
}

qcat_status qcat_report_text(const qcat_report* report, char** out) {
  if (!report || !out) return fail(QCAT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(qcat::report_text(report->report));
    return QCAT_OK;
  });
}

void qcat_report_free(qcat_report* report) { delete report; }

void qcat_string_free(char* s) { std::free(s); }

}  // extern "C"
