#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace connset {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error conditions surfaced by the library. Each maps to one failure mode of
// a public operation; tests match on the code, not the message.
enum class errc {
    byte_out_of_range,
    truncated_input,
    trailing_garbage,
    duplicate_edge,
    self_loop,
    vertex_out_of_range,
    malformed,
    graph_too_large,
    disconnected,
    budget_exceeded,
    empty_root,
    root_not_connected,
    not_a_cut_vertex,
    invalid_params,
    unknown_statement,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::byte_out_of_range: return "byte_out_of_range";
        case errc::truncated_input: return "truncated_input";
        case errc::trailing_garbage: return "trailing_garbage";
        case errc::duplicate_edge: return "duplicate_edge";
        case errc::self_loop: return "self_loop";
        case errc::vertex_out_of_range: return "vertex_out_of_range";
        case errc::malformed: return "malformed";
        case errc::graph_too_large: return "graph_too_large";
        case errc::disconnected: return "disconnected";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::empty_root: return "empty_root";
        case errc::root_not_connected: return "root_not_connected";
        case errc::not_a_cut_vertex: return "not_a_cut_vertex";
        case errc::invalid_params: return "invalid_params";
        case errc::unknown_statement: return "unknown_statement";
    }
    return "unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

// Counts recursion nodes / enumerated subsets across one logical operation.
// Exceeding the limit raises budget_exceeded; results are never approximated.
struct WorkBudget {
    std::uint64_t limit = 1'000'000'000;
    std::uint64_t used = 0;

    void charge(std::uint64_t amount = 1) {
        used += amount;
        if (used > limit) fail(errc::budget_exceeded, "work budget exhausted");
    }
};

inline std::string to_decimal(const Int& v) { return v.str(); }

// Lowest-terms fraction; the "/q" suffix is omitted when q == 1.
inline std::string to_fraction(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace connset
