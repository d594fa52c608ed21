#ifndef K3CYCLO_EXPR_HPP
#define K3CYCLO_EXPR_HPP

#include "k3cyclo/obstruction.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace k3cyclo {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A parsed polynomial expression. Inputs built from cyc(m), salem(n),
/// (x-1), (x+1) stay factored; anything else (raw dense input, or a product
/// containing an unrecognized parenthesized polynomial) is expanded.
using ParsedPoly = std::variant<FactoredCharPoly, IntPolynomial>;

/// Grammar: product of atoms `cyc(M)`, `salem(N)`, `(dense)` with optional
/// `^k`, or a single top-level dense polynomial `x^6 - 2x^5 + 1`.
/// Whitespace-insensitive. cyc(1) and cyc(2) fold into the linear exponents.
ParsedPoly parse_poly_expr(std::string_view text);

/// Factored rendering in the same grammar: salem first, cyclotomics by
/// descending index, then (x-1)^a (x+1)^b.
std::string render(const FactoredCharPoly& f);
std::string render(const IntPolynomial& p);
std::string render(const ParsedPoly& p);

/// The expansion of either alternative.
IntPolynomial expand(const ParsedPoly& p);

} // namespace k3cyclo

#endif
