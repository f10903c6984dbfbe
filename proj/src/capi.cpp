#include "noncross.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "bijection.hpp"
#include "block_partition.hpp"
#include "dyck.hpp"
#include "errors.hpp"
#include "family_enum.hpp"
#include "recurrences.hpp"
#include "transform.hpp"
#include "verify.hpp"

using namespace noncross;

namespace {

thread_local std::string t_last_error = "no error";

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ncx_status fail(ncx_status code, const std::string& message) {
  t_last_error = message;
  return code;
}

// Runs fn, translating the library's exceptions onto status codes.
template <typename Fn>
ncx_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    return fail(NCX_ERROR_PARSE, e.what());
  } catch (const bound_error& e) {
    return fail(NCX_ERROR_BOUND, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NCX_ERROR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(NCX_ERROR_INTERNAL, e.what());
  }
}

BigCount count_by_method(Family f, unsigned n, const char* method, unsigned bound) {
  std::string m = method ? method : "auto";
  if (m == "auto" || m == "closed" || m == "recurrence") return closed_count(f, n);
  if (m == "bruteforce") return count_family_bruteforce(f, n, bound);
  throw std::invalid_argument(
      "unknown method; expected auto, closed, recurrence or bruteforce");
}

std::vector<unsigned> parse_label_list(const char* labels) {
  std::string_view text = labels ? labels : "";
  std::vector<unsigned> out;
  std::size_t i = 0;
  bool expect_value = true;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!expect_value) throw parse_error("expected ',' between labels", i);
      unsigned v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + (text[i++] - '0');
      out.push_back(v);
      expect_value = false;
    } else if (c == ',') {
      if (expect_value) throw parse_error("expected a label before ','", i);
      expect_value = true;
      ++i;
    } else {
      throw parse_error("unexpected character in label list", i);
    }
  }
  if (expect_value) throw parse_error("expected a label", text.size());
  return out;
}

}  // namespace

struct ncx_enum {
  FamilyStream stream;
  std::string current;
};

extern "C" {

const char* ncx_status_name(ncx_status s) {
  switch (s) {
    case NCX_OK: return "ok";
    case NCX_ERROR_INVALID: return "invalid argument";
    case NCX_ERROR_PARSE: return "parse error";
    case NCX_ERROR_BOUND: return "bound exceeded";
    case NCX_ERROR_CHECK: return "checks failed";
    case NCX_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ncx_last_error(void) { return t_last_error.c_str(); }

void ncx_free(char* p) { std::free(p); }

const char* ncx_version(void) { return "1.0.0"; }

ncx_status ncx_count(const char* family, unsigned n, const char* method,
                     unsigned bound, char** out) {
  return guarded([&]() -> ncx_status {
    if (!family || !out) return fail(NCX_ERROR_INVALID, "null argument");
    if (n == 0) return fail(NCX_ERROR_INVALID, "n must be at least 1");
    BigCount c = count_by_method(parse_family(family), n, method, bound);
    *out = dup_string(c.get_str());
    return NCX_OK;
  });
}

ncx_status ncx_seq(const char* family, unsigned upto, const char* method,
                   unsigned bound, char** out) {
  return guarded([&]() -> ncx_status {
    if (!family || !out) return fail(NCX_ERROR_INVALID, "null argument");
    if (upto == 0) return fail(NCX_ERROR_INVALID, "upto must be at least 1");
    Family f = parse_family(family);
    std::string text;
    for (unsigned n = 1; n <= upto; ++n) {
      text += std::to_string(n);
      text += ' ';
      text += count_by_method(f, n, method, bound).get_str();
      text += '\n';
    }
    *out = dup_string(text);
    return NCX_OK;
  });
}

ncx_status ncx_enum_open(const char* family, unsigned n, ncx_enum** out) {
  return guarded([&]() -> ncx_status {
    if (!family || !out) return fail(NCX_ERROR_INVALID, "null argument");
    if (n == 0) return fail(NCX_ERROR_INVALID, "n must be at least 1");
    *out = new ncx_enum{FamilyStream(parse_family(family), n), {}};
    return NCX_OK;
  });
}

int ncx_enum_next(ncx_enum* e, char** out_item) {
  if (!e || !out_item) return 0;
  BlockPartition p;
  if (!e->stream.next(p)) return 0;
  try {
    *out_item = dup_string(format_partition(p));
  } catch (...) {
    return 0;
  }
  return 1;
}

void ncx_enum_close(ncx_enum* e) { delete e; }

ncx_status ncx_transform(const char* text, int inverse, const char* style,
                         unsigned max_terms, char** out) {
  return guarded([&]() -> ncx_status {
    if (!text || !out) return fail(NCX_ERROR_INVALID, "null argument");
    ParsedSequence in = parse_sequence_text(text);
    if (max_terms > 0) {
      if (in.seq.terms.size() < max_terms + 1)
        return fail(NCX_ERROR_INVALID,
                    "max terms exceeds the " +
                        std::to_string(in.seq.terms.size()) +
                        " terms the input provides");
      in.seq.terms.resize(max_terms + 1);
    }
    Sequence result = inverse ? ncp_inverse(in.seq) : ncp_transform(in.seq);
    SequenceStyle out_style = in.style;
    unsigned first_index = in.first_index;
    std::string s = style ? style : "mirror";
    if (s == "comma") {
      out_style = SequenceStyle::CommaLine;
    } else if (s == "space") {
      out_style = SequenceStyle::SpaceLine;
    } else if (s == "lines") {
      out_style = SequenceStyle::Lines;
    } else if (s == "pairs") {
      out_style = SequenceStyle::IndexPairs;
      first_index = 0;
    } else if (s != "mirror") {
      return fail(NCX_ERROR_INVALID,
                  "unknown style; expected mirror, comma, space, lines or pairs");
    }
    *out = dup_string(format_sequence(result, out_style, first_index));
    return NCX_OK;
  });
}

ncx_status ncx_bijection_forward(const char* path, const char* labels,
                                 int with_trace, char** out) {
  return guarded([&]() -> ncx_status {
    if (!path || !labels || !out) return fail(NCX_ERROR_INVALID, "null argument");
    PeakLabeledDyckPath p{parse_dyck(path), parse_label_list(labels)};
    BijectionTrace trace;
    BlockPartition image =
        bijection_forward(p, with_trace ? &trace : nullptr);
    std::string text;
    if (with_trace) text = render_trace(trace);
    text += format_partition(image);
    text += '\n';
    *out = dup_string(text);
    return NCX_OK;
  });
}

ncx_status ncx_bijection_inverse(const char* partition, int with_trace,
                                 char** out) {
  return guarded([&]() -> ncx_status {
    if (!partition || !out) return fail(NCX_ERROR_INVALID, "null argument");
    BlockPartition q = parse_partition(partition, true, false);
    BijectionTrace trace;
    PeakLabeledDyckPath p = bijection_inverse(q, with_trace ? &trace : nullptr);
    std::string text;
    if (with_trace) text = render_trace(trace);
    text += format_dyck(p.path);
    text += '\n';
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
      if (i) text += ',';
      text += std::to_string(p.labels[i]);
    }
    text += '\n';
    *out = dup_string(text);
    return NCX_OK;
  });
}

ncx_status ncx_verify(const char* suite, unsigned max_n, char** report) {
  return guarded([&]() -> ncx_status {
    if (!suite || !report) return fail(NCX_ERROR_INVALID, "null argument");
    std::vector<CheckResult> results = run_suite(suite, max_n);
    *report = dup_string(render_report(results));
    if (!all_passed(results))
      return fail(NCX_ERROR_CHECK, "one or more checks failed");
    return NCX_OK;
  });
}

}  // extern "C"
