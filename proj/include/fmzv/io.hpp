#ifndef FMZV_IO_HPP
#define FMZV_IO_HPP

#include "fmzv/words.hpp"

#include <stdexcept>
#include <string>

namespace fmzv {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& expected, const std::string& input);
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

std::string format_letter(Alphabet a, Letter c);
// The empty word prints as "1".
std::string format_word(Alphabet a, const Word& w);
// X: "x0x1" or digits "01"; Y: "y3 y1" or "y3y1"; S: "s3 s5". "1", "()" and "" are the empty word.
Word parse_word(Alphabet a, const std::string& text);

// Terms "c*word" joined by + and -, canonical order; zero prints as "0".
std::string format_poly(const NCPoly& p);
NCPoly parse_poly(Alphabet a, const std::string& text);

// Terms "c*left ⊗ right".
std::string format_tensor(const Tensor2& t);

std::string poly_to_json(const NCPoly& p);
NCPoly poly_from_json(const std::string& json);
std::string tensor_to_json(const Tensor2& t);

}  // namespace fmzv

#endif
