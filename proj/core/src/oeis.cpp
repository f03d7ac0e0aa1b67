#include "shrub/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef SHRUB_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#endif

namespace shrub {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigCount parse_value(const std::string& tok, std::size_t lineno) {
    if (tok.empty()) throw parse_error(lineno, "empty value");
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) throw parse_error(lineno, "bare sign");
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
            throw parse_error(lineno, "bad value '" + tok + "'");
        }
    }
    return BigCount(tok);
}

}  // namespace

Sequence parse_bfile(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    Sequence seq;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string idx_tok, val_tok, extra;
        if (!(ls >> idx_tok >> val_tok)) {
            throw parse_error(lineno, "expected 'index value'");
        }
        if (ls >> extra) {
            throw parse_error(lineno, "trailing data '" + extra + "'");
        }
        long long idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoll(idx_tok, &used);
            if (used != idx_tok.size()) throw std::invalid_argument(idx_tok);
        } catch (const std::exception&) {
            throw parse_error(lineno, "bad index '" + idx_tok + "'");
        }
        BigCount value = parse_value(val_tok, lineno);
        if (first) {
            seq.offset = idx;
            first = false;
        } else if (idx != seq.offset + static_cast<long long>(seq.terms.size())) {
            throw parse_error(lineno, "index " + idx_tok + " breaks the run at " +
                                          std::to_string(seq.offset +
                                                         static_cast<long long>(
                                                             seq.terms.size())));
        }
        seq.terms.push_back(std::move(value));
    }
    if (first) throw parse_error(lineno == 0 ? 1 : lineno, "no data lines");
    return seq;
}

std::string emit_bfile(const Sequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.terms.size(); ++i) {
        out += std::to_string(seq.offset + static_cast<long long>(i));
        out += ' ';
        out += seq.terms[i].str();
        out += '\n';
    }
    return out;
}

namespace {

struct Alignment {
    long long shift;
    std::size_t overlap;
    bool agrees;
    long long first_bad = 0;  // computed-axis index of the first mismatch
};

Alignment align(const Sequence& c, const Sequence& r, long long shift) {
    // computed index i pairs with reference index i + shift
    const long long lo = std::max(c.offset, r.offset - shift);
    const long long hi =
        std::min(c.offset + static_cast<long long>(c.terms.size()),
                 r.offset + static_cast<long long>(r.terms.size()) - shift);
    Alignment a{shift, 0, true};
    if (hi <= lo) {
        a.agrees = false;
        return a;
    }
    a.overlap = static_cast<std::size_t>(hi - lo);
    for (long long i = lo; i < hi; ++i) {
        const BigCount& cv = c.terms[static_cast<std::size_t>(i - c.offset)];
        const BigCount& rv = r.terms[static_cast<std::size_t>(i + shift - r.offset)];
        if (cv != rv) {
            a.agrees = false;
            a.first_bad = i;
            return a;
        }
    }
    return a;
}

}  // namespace

CompareReport compare(const Sequence& computed, const Sequence& reference) {
    CompareReport rep;
    if (computed.terms.empty() || reference.terms.empty()) {
        rep.note = "nothing to compare";
        return rep;
    }
    const Alignment direct = align(computed, reference, 0);
    if (direct.overlap > 0 && direct.agrees) {
        rep.agree = true;
        rep.overlap = direct.overlap;
        rep.note = "aligned at matching indices";
        return rep;
    }
    // Try every shift with at least one aligned pair, widest overlap first.
    const long long c_last =
        computed.offset + static_cast<long long>(computed.terms.size()) - 1;
    const long long r_last =
        reference.offset + static_cast<long long>(reference.terms.size()) - 1;
    Alignment best{0, 0, false};
    for (long long shift = reference.offset - c_last;
         shift <= r_last - computed.offset; ++shift) {
        if (shift == 0) continue;
        const Alignment a = align(computed, reference, shift);
        if (a.agrees &&
            (a.overlap > best.overlap ||
             (a.overlap == best.overlap && std::llabs(shift) < std::llabs(best.shift)))) {
            best = a;
        }
    }
    if (best.agrees && best.overlap > 0) {
        rep.agree = true;
        rep.overlap = best.overlap;
        rep.shift = best.shift;
        rep.note = "values agree with indices shifted by " +
                   std::to_string(best.shift);
        return rep;
    }
    if (direct.overlap > 0) {
        rep.overlap = direct.overlap;
        rep.has_mismatch = true;
        rep.computed_index = direct.first_bad;
        rep.computed_value =
            computed.terms[static_cast<std::size_t>(direct.first_bad -
                                                    computed.offset)];
        rep.reference_value =
            reference.terms[static_cast<std::size_t>(direct.first_bad -
                                                     reference.offset)];
        rep.note = "first mismatch at index " + std::to_string(direct.first_bad);
        return rep;
    }
    rep.note = "no overlapping indices and no agreeing shift";
    return rep;
}

std::string bfile_url(const std::string& id) {
    if (id.size() < 2 || id[0] != 'A') {
        throw invalid_input("sequence id must look like A000000");
    }
    for (std::size_t i = 1; i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) {
            throw invalid_input("sequence id must look like A000000");
        }
    }
    return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

std::string cache_path(const std::string& cache_dir, const std::string& id) {
    return (std::filesystem::path(cache_dir) / (id + ".txt")).string();
}

namespace {

std::string builtin_fetch(const std::string& url) {
#ifdef SHRUB_HAVE_OPENSSL
    const std::string prefix = "https://";
    if (url.rfind(prefix, 0) != 0) throw invalid_input("expected an https url");
    const std::size_t slash = url.find('/', prefix.size());
    const std::string host = url.substr(0, slash);
    const std::string path = url.substr(slash);
    httplib::Client client(host);
    client.set_follow_location(true);
    httplib::Result res = client.Get(path);
    if (!res) {
        throw invalid_input("fetch failed for " + url + ": " +
                            httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw invalid_input("fetch failed for " + url + ": HTTP " +
                            std::to_string(res->status));
    }
    return res->body;
#else
    throw invalid_input("built without TLS support; pass a transport or "
                        "populate the cache for " + url);
#endif
}

}  // namespace

Sequence fetch(const std::string& id, const std::string& cache_dir, bool offline,
               const Transport& transport) {
    const std::string path = cache_path(cache_dir, id);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        Sequence seq = parse_bfile(buf.str());
        seq.id = id;
        return seq;
    }
    if (offline) {
        throw invalid_input("offline and no cached copy of " + id +
                            "; place the b-file at " + path);
    }
    const std::string url = bfile_url(id);
    const std::string body = transport ? transport(url) : builtin_fetch(url);
    Sequence seq = parse_bfile(body);
    seq.id = id;
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(path);
    out << body;
    return seq;
}

}  // namespace shrub
