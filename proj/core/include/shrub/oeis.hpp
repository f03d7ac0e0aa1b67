#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "shrub/bigint.hpp"
#include "shrub/errors.hpp"

namespace shrub {

// A contiguous run of sequence terms starting at `offset`.
struct Sequence {
    std::string id;  // e.g. "A257995"; empty when not known
    long long offset = 0;
    std::vector<BigCount> terms;

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

// Parses b-file text: lines "index value", blank lines and '#' comments
// ignored. Indices must increase by exactly 1; violations and malformed
// lines raise parse_error with the 1-based line number.
Sequence parse_bfile(const std::string& text);

// Canonical "index value\n" lines. parse(emit(s)) == s.
std::string emit_bfile(const Sequence& seq);

struct CompareReport {
    bool agree = false;
    std::size_t overlap = 0;   // number of aligned terms compared
    long long shift = 0;       // reference index minus computed index
    bool has_mismatch = false;
    long long computed_index = 0;  // position of the first mismatch, computed axis
    BigCount computed_value;
    BigCount reference_value;
    std::string note;
};

// Aligns the two runs by index and reports full agreement or the first
// mismatch. If the direct alignment disagrees or is empty, value-run matching
// tries index shifts and reports the shift that makes the overlap agree.
CompareReport compare(const Sequence& computed, const Sequence& reference);

// Returns the response body for a URL; throws on failure.
using Transport = std::function<std::string(const std::string& url)>;

std::string bfile_url(const std::string& id);
std::string cache_path(const std::string& cache_dir, const std::string& id);

// Loads <cache_dir>/<id>.txt, fetching it over HTTPS on a cold cache when
// offline is false. A cold cache with offline=true raises invalid_input
// naming the cache path for manual placement. Passing a transport overrides
// the built-in HTTPS client (which is absent when TLS support is not
// compiled in).
Sequence fetch(const std::string& id, const std::string& cache_dir, bool offline,
               const Transport& transport = {});

}  // namespace shrub
