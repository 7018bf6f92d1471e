#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trisector/triangulation.hpp"

namespace trisector {

// Decode failure, with the offset of the offending character in the
// whitespace-stripped input (or the end of input for truncation).
class IsoSigError : public std::runtime_error {
public:
    IsoSigError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " +
                             std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Parses an isomorphism signature into a triangulation.  Whitespace
// (including newlines in wrapped signatures) is ignored.  Throws
// IsoSigError on malformed input; accepts only connected
// triangulations, as produced by encode_isosig().
Triangulation decode_isosig(std::string_view sig);

// Produces the canonical signature of a connected triangulation: the
// byte-wise smallest encoding over all start pentachora and all start
// relabellings.  Two triangulations get the same string iff they are
// isomorphic (related by relabelling pentachora and their vertices).
// Pre: t is connected and non-empty; throws std::invalid_argument
// otherwise.
std::string encode_isosig(const Triangulation& t);

// The printable signature alphabet: values 0..63.
char isosig_char(int value);
int isosig_value(char c);  // -1 if not in the alphabet

}  // namespace trisector
