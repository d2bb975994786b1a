#pragma once

#include <string>
#include <variant>

#include "tlr/concat.hpp"
#include "tlr/linear_code.hpp"
#include "tlr/list_tuple.hpp"

namespace tlr {

// File formats (bit-exact round trips):
//   code:   {"field": {"s": int, "poly": int}, "n": int, "k": int,
//            "systematic": bool, "permutation": [int]|null,
//            "generator": [[int]]}            generator row-major, n rows of k
//   concat: the outer code's fields at top level, extended with
//           {"inners": [code...], "basis": "coefficient"}
//   tuple:  {"n": int, "ell": int, "sets": [[int]]}
//   word:   {"field": {"s": int, "poly": int}, "symbols": [int]}

using AnyCode = std::variant<LinearCode, ConcatCode>;

std::string code_to_json(const LinearCode& code);
std::string code_to_json(const ConcatCode& code);
AnyCode code_from_json(const std::string& text);

void save_code(const AnyCode& code, const std::string& path);
AnyCode load_code(const std::string& path);

/// Loads and requires a plain linear code.
LinearCode load_linear_code(const std::string& path);

std::string tuple_to_json(const ListTuple& tuple);
ListTuple tuple_from_json(const std::string& text);
void save_tuple(const ListTuple& tuple, const std::string& path);
ListTuple load_tuple(const std::string& path);

struct Word {
    int s = 1;
    std::uint32_t poly = 0;
    std::vector<fe_t> symbols;
};

std::string word_to_json(const Word& word);
Word word_from_json(const std::string& text);
void save_word(const Word& word, const std::string& path);
Word load_word(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tlr
