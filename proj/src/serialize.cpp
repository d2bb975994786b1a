#include "tlr/serialize.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace tlr {

using nlohmann::json;

namespace {

json field_to_json(const Field& f) { return json{{"s", f.s()}, {"poly", f.poly()}}; }

FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("s") || !j.contains("poly"))
        throw ValidationError("code file: field must carry s and poly");
    return make_field(j.at("s").get<int>(), j.at("poly").get<std::uint32_t>());
}

json linear_to_json(const LinearCode& code) {
    json gen = json::array();
    for (std::size_t i = 0; i < code.n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < code.k; ++j) row.push_back(code.generator.at(i, j));
        gen.push_back(std::move(row));
    }
    json j{{"field", field_to_json(*code.field)},
           {"n", code.n},
           {"k", code.k},
           {"systematic", code.systematic},
           {"generator", std::move(gen)}};
    if (code.permutation)
        j["permutation"] = *code.permutation;
    else
        j["permutation"] = nullptr;
    return j;
}

LinearCode linear_from_json(const json& j, bool require_rank = true) {
    LinearCode code;
    code.field = field_from_json(j.at("field"));
    code.n = j.at("n").get<std::size_t>();
    code.k = j.at("k").get<std::size_t>();
    if (code.k > code.n) throw ValidationError("code file: k > n");
    const auto& gen = j.at("generator");
    if (!gen.is_array() || gen.size() != code.n) throw ValidationError("code file: generator must have n rows");
    code.generator = Matrix(code.n, code.k);
    for (std::size_t i = 0; i < code.n; ++i) {
        const auto& row = gen.at(i);
        if (!row.is_array() || row.size() != code.k) throw ValidationError("code file: generator row must have k entries");
        for (std::size_t c = 0; c < code.k; ++c) {
            const auto v = row.at(c).get<std::uint32_t>();
            if (!code.field->contains(v)) throw ValidationError("code file: generator entry outside field");
            code.generator.at(i, c) = static_cast<fe_t>(v);
        }
    }
    code.systematic = j.value("systematic", false);
    if (j.contains("permutation") && !j.at("permutation").is_null()) {
        auto perm = j.at("permutation").get<std::vector<std::size_t>>();
        if (perm.size() != code.n) throw ValidationError("code file: permutation must have n entries");
        std::vector<bool> seen(code.n, false);
        for (std::size_t p : perm) {
            if (p >= code.n || seen[p]) throw ValidationError("code file: permutation is not a permutation");
            seen[p] = true;
        }
        code.permutation = std::move(perm);
    }
    if (require_rank && rank(*code.field, code.generator) != code.k)
        throw ValidationError("code file: generator rank below k (not injective)");
    if (code.systematic) {
        for (std::size_t i = 0; i < code.k; ++i)
            for (std::size_t c = 0; c < code.k; ++c)
                if (code.generator.at(i, c) != (i == c ? 1 : 0))
                    throw ValidationError("code file: systematic flag set but top block is not the identity");
    }
    return code;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed JSON");
    return j;
}

// Missing keys and type mismatches surface as nlohmann exceptions; callers
// see them as validation errors.
template <typename Fn>
auto translated(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed file: ") + e.what());
    }
}

}  // namespace

std::string code_to_json(const LinearCode& code) { return linear_to_json(code).dump(2); }

std::string code_to_json(const ConcatCode& code) {
    json j = linear_to_json(code.outer);
    json inners = json::array();
    for (const auto& inner : code.inners) inners.push_back(linear_to_json(inner));
    j["inners"] = std::move(inners);
    j["basis"] = "coefficient";
    return j.dump(2);
}

AnyCode code_from_json(const std::string& text) {
    return translated([&]() -> AnyCode {
        const json j = parse(text);
        if (!j.contains("inners")) return linear_from_json(j);
        if (j.value("basis", "") != std::string("coefficient"))
            throw ValidationError("concat code file: unknown basis (expected \"coefficient\")");
        LinearCode outer = linear_from_json(j);
        std::vector<LinearCode> inners;
        // Random inners are sampled unrestricted and may be rank-deficient, so
        // skip the injectivity check the plain loader enforces.
        for (const auto& ij : j.at("inners")) inners.push_back(linear_from_json(ij, /*require_rank=*/false));
        return make_concat(std::move(outer), std::move(inners));
    });
}

void save_code(const AnyCode& code, const std::string& path) {
    std::visit([&](const auto& c) { write_file(path, code_to_json(c)); }, code);
}

AnyCode load_code(const std::string& path) { return code_from_json(read_file(path)); }

LinearCode load_linear_code(const std::string& path) {
    auto any = load_code(path);
    if (auto* lin = std::get_if<LinearCode>(&any)) return std::move(*lin);
    throw ValidationError(path + ": expected a plain linear code, found a concatenated code");
}

std::string tuple_to_json(const ListTuple& tuple) {
    json j{{"n", tuple.n}, {"ell", tuple.ell}, {"sets", tuple.sets}};
    return j.dump(2);
}

ListTuple tuple_from_json(const std::string& text) {
    return translated([&]() -> ListTuple {
    const json j = parse(text);
    ListTuple tuple;
    tuple.n = j.at("n").get<std::size_t>();
    tuple.ell = j.at("ell").get<std::size_t>();
    tuple.sets = j.at("sets").get<std::vector<std::vector<fe_t>>>();
    if (tuple.sets.size() != tuple.n) throw ValidationError("tuple file: expected n sets");
    for (const auto& s : tuple.sets) {
        if (s.empty() || s.size() > tuple.ell) throw ValidationError("tuple file: set size outside [1, ell]");
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] <= s[i - 1]) throw ValidationError("tuple file: sets must be sorted and unique");
    }
    return tuple;
    });
}

void save_tuple(const ListTuple& tuple, const std::string& path) { write_file(path, tuple_to_json(tuple)); }

ListTuple load_tuple(const std::string& path) { return tuple_from_json(read_file(path)); }

std::string word_to_json(const Word& word) {
    json j{{"field", json{{"s", word.s}, {"poly", word.poly}}}, {"symbols", word.symbols}};
    return j.dump(2);
}

Word word_from_json(const std::string& text) {
    return translated([&]() -> Word {
        const json j = parse(text);
        Word word;
        word.s = j.at("field").at("s").get<int>();
        word.poly = j.at("field").at("poly").get<std::uint32_t>();
        word.symbols = j.at("symbols").get<std::vector<fe_t>>();
        const auto field = make_field(word.s, word.poly);
        for (fe_t v : word.symbols)
            if (!field->contains(v)) throw ValidationError("word file: symbol outside field");
        return word;
    });
}

void save_word(const Word& word, const std::string& path) { write_file(path, word_to_json(word)); }

Word load_word(const std::string& path) { return word_from_json(read_file(path)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << contents;
    if (!contents.empty() && contents.back() != '\n') out << '\n';
}

}  // namespace tlr
