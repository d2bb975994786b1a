#include "tlr/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "tlr/allr.hpp"
#include "tlr/compose.hpp"
#include "tlr/concat.hpp"
#include "tlr/experiment.hpp"
#include "tlr/serialize.hpp"

namespace tlr {

namespace {

using nlohmann::json;

std::vector<fe_t> parse_symbols(const std::string& text) {
    std::vector<fe_t> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(static_cast<fe_t>(std::stoul(cur)));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (out.empty()) throw ValidationError("empty symbol list");
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text << std::endl;
    else
        write_file(path, text);
}

json messages_to_json(const std::vector<std::vector<fe_t>>& msgs) {
    json arr = json::array();
    for (const auto& m : msgs) arr.push_back(m);
    return arr;
}

struct GenOptions {
    int s = 1;
    std::uint32_t poly = 0;
    std::size_t n = 0, k = 0, t = 2;
    std::uint64_t seed = 0;
    std::string base, outer, out;
    std::string rho_in = "1/2";
    bool make_systematic = false;
};

FieldPtr field_from(const GenOptions& opt) {
    return opt.poly != 0 ? make_field(opt.s, opt.poly) : make_field(opt.s);
}

int run_gen(const std::string& kind, const GenOptions& opt) {
    if (kind == "rs" || kind == "random") {
        LinearCode code = kind == "rs" ? rs_code(field_from(opt), opt.n, opt.k)
                                       : random_linear_code(field_from(opt), opt.n, opt.k, opt.seed);
        if (opt.make_systematic) code = systematize(code);
        emit(code_to_json(code), opt.out);
        return 0;
    }
    if (kind == "tensor") {
        LinearCode base = load_linear_code(opt.base);
        emit(code_to_json(to_linear_code(tensor_power(base, opt.t))), opt.out);
        return 0;
    }
    if (kind == "thommesen") {
        const LinearCode outer = load_linear_code(opt.outer);
        emit(code_to_json(thommesen_sample(outer, parse_rational(opt.rho_in), opt.seed)), opt.out);
        return 0;
    }
    throw ValidationError("gen: unknown kind '" + kind + "'");
}

AllrParams allr_params_from_flags(const std::string& alpha, std::size_t ell, std::uint64_t list_bound,
                                  const std::string& eps_tilde, std::size_t m, std::size_t base_n) {
    AllrParams params;
    params.base.alpha = parse_rational(alpha);
    params.base.ell = ell;
    params.base.list_bound = list_bound;
    params.eps_tilde = eps_tilde.empty() ? Rational(0) : parse_rational(eps_tilde);
    if (m > 0) params.overrides.m_fixed = std::min(m, base_n);
    return params;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"tensor list-recovery laboratory"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a code file");
    gen->require_subcommand(1);
    GenOptions gopt;
    std::size_t q_flag = 0;
    auto add_field_flags = [&](CLI::App* cmd) {
        cmd->add_option("--q", q_flag, "field size (power of two)");
        cmd->add_option("--s", gopt.s, "field exponent");
        cmd->add_option("--poly", gopt.poly, "irreducible polynomial bits (override)");
    };
    auto* gen_rs = gen->add_subcommand("rs", "Reed-Solomon code");
    add_field_flags(gen_rs);
    gen_rs->add_option("--n", gopt.n)->required();
    gen_rs->add_option("--k", gopt.k)->required();
    gen_rs->add_flag("--systematic", gopt.make_systematic, "systematize the generator");
    gen_rs->add_option("-o,--out", gopt.out);
    auto* gen_random = gen->add_subcommand("random", "random linear code");
    add_field_flags(gen_random);
    gen_random->add_option("--n", gopt.n)->required();
    gen_random->add_option("--k", gopt.k)->required();
    gen_random->add_option("--seed", gopt.seed);
    gen_random->add_flag("--systematic", gopt.make_systematic);
    gen_random->add_option("-o,--out", gopt.out);
    auto* gen_tensor = gen->add_subcommand("tensor", "materialized tensor power of a base code");
    gen_tensor->add_option("--base", gopt.base)->required();
    gen_tensor->add_option("--t", gopt.t)->required();
    gen_tensor->add_option("-o,--out", gopt.out);
    auto* gen_thom = gen->add_subcommand("thommesen", "random concatenation of an outer code");
    gen_thom->add_option("--outer", gopt.outer)->required();
    gen_thom->add_option("--rho-in", gopt.rho_in)->required();
    gen_thom->add_option("--seed", gopt.seed);
    gen_thom->add_option("-o,--out", gopt.out);

    // ---- encode ----
    auto* encode = app.add_subcommand("encode", "encode a message with a code file");
    std::string enc_code, enc_msg, enc_out;
    encode->add_option("--code", enc_code)->required();
    encode->add_option("--msg", enc_msg, "comma-separated symbols")->required();
    encode->add_option("-o,--out", enc_out);

    // ---- corrupt ----
    auto* corrupt = app.add_subcommand("corrupt", "turn a word into a corrupted list tuple");
    std::string cor_word, cor_out, cor_alpha = "0", cor_mode = "filled";
    std::size_t cor_ell = 1;
    std::uint64_t cor_seed = 0;
    corrupt->add_option("--word", cor_word)->required();
    corrupt->add_option("--alpha", cor_alpha)->required();
    corrupt->add_option("--ell", cor_ell)->required();
    corrupt->add_option("--seed", cor_seed);
    corrupt->add_option("--mode", cor_mode, "filled | sparse");
    corrupt->add_option("-o,--out", cor_out);

    // ---- recover ----
    auto* recover = app.add_subcommand("recover", "list recovery from a tuple file");
    std::string rec_code, rec_lists, rec_mode = "global", rec_alpha = "0", rec_eps, rec_out, rec_ldc = "identity";
    std::size_t rec_ell = 1, rec_t = 2, rec_m = 0, rec_kh = 0, rec_reps = 5;
    std::uint64_t rec_bound = 4, rec_seed = 0;
    bool rec_unfiltered = false;
    recover->add_option("--code", rec_code)->required();
    recover->add_option("--lists", rec_lists)->required();
    recover->add_option("--mode", rec_mode, "global | allr | compose | globalize");
    recover->add_option("--alpha", rec_alpha, "radius (global) / base radius (local modes)");
    recover->add_option("--ell", rec_ell);
    recover->add_option("--t", rec_t);
    recover->add_option("--m", rec_m, "advice rows per level (0 = schedule formula)");
    recover->add_option("--eps-tilde", rec_eps);
    recover->add_option("--list-bound", rec_bound, "declared base output-list bound");
    recover->add_option("--ldc", rec_ldc, "identity | hadamard (compose/globalize)");
    recover->add_option("--kh", rec_kh, "pre-code message length (0 = fill the tensor message space)");
    recover->add_option("--reps", rec_reps, "hadamard repetitions");
    recover->add_option("--seed", rec_seed);
    recover->add_flag("--unfiltered", rec_unfiltered, "skip the radius filter (globalize)");
    recover->add_option("-o,--out", rec_out);

    // ---- gv ----
    auto* gv = app.add_subcommand("gv", "unique decoding / feasibility near the distance bound");
    gv->require_subcommand(1);
    auto* gv_decode = gv->add_subcommand("decode", "unique-decode a received word");
    std::string gvd_code, gvd_received, gvd_alpha_in, gvd_alpha_out, gvd_out;
    gv_decode->add_option("--code", gvd_code)->required();
    gv_decode->add_option("--received", gvd_received)->required();
    gv_decode->add_option("--alpha-in", gvd_alpha_in);
    gv_decode->add_option("--alpha-out", gvd_alpha_out);
    gv_decode->add_option("-o,--out", gvd_out);
    auto* gv_feas = gv->add_subcommand("feasibility", "check the decode-radius inequality");
    double gvf_rho = 0.02, gvf_eps = 0.01, gvf_c = 0;
    gv_feas->add_option("--rho", gvf_rho)->required();
    gv_feas->add_option("--eps", gvf_eps)->required();
    gv_feas->add_option("--c", gvf_c, "universal constant (caller-supplied, never guessed)")->required();

    // ---- experiment / report ----
    auto* experiment = app.add_subcommand("experiment", "run a config-driven experiment");
    std::string exp_config;
    experiment->add_option("--config", exp_config)->required();
    auto* report_cmd = app.add_subcommand("report", "print the per-trial CSV of a report file");
    std::string rep_path, rep_out;
    report_cmd->add_option("--csv", rep_path, "report JSON path")->required();
    report_cmd->add_option("-o,--out", rep_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help() << std::endl;
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (q_flag != 0) {
                int s = 0;
                while ((std::size_t{1} << s) < q_flag) ++s;
                if ((std::size_t{1} << s) != q_flag)
                    throw ValidationError("--q must be a power of two (or pass --s)");
                gopt.s = s;
            }
            for (const char* kind : {"rs", "random", "tensor", "thommesen"})
                if (gen->get_subcommand(kind)->parsed()) return run_gen(kind, gopt);
        }
        if (encode->parsed()) {
            const auto any = load_code(enc_code);
            const auto msg = parse_symbols(enc_msg);
            Word word;
            if (const auto* lin = std::get_if<LinearCode>(&any)) {
                word.s = lin->field->s();
                word.poly = lin->field->poly();
                word.symbols = lin->encode(msg);
            } else {
                const auto& cc = std::get<ConcatCode>(any);
                word.s = 1;
                word.poly = Field::default_poly(1);
                word.symbols = cc.encode(msg);
            }
            emit(word_to_json(word), enc_out);
            return 0;
        }
        if (corrupt->parsed()) {
            const Word word = load_word(cor_word);
            const auto field = make_field(word.s, word.poly);
            const CorruptMode mode = [&] {
                if (cor_mode == "filled") return CorruptMode::Filled;
                if (cor_mode == "sparse") return CorruptMode::Sparse;
                throw ValidationError("corrupt: mode must be filled | sparse");
            }();
            emit(tuple_to_json(
                     corrupt_to_lists(word.symbols, *field, parse_rational(cor_alpha), cor_ell, cor_seed, mode)),
                 cor_out);
            return 0;
        }
        if (recover->parsed()) {
            const ListTuple tuple = load_tuple(rec_lists);
            if (rec_mode == "global") {
                const LinearCode code = load_linear_code(rec_code);
                tuple.validate(*code.field);
                emit(messages_to_json(brute_force_list_recover(code, tuple, parse_rational(rec_alpha))).dump(2),
                     rec_out);
                return 0;
            }
            LinearCode base = load_linear_code(rec_code);
            const AllrParams params =
                allr_params_from_flags(rec_alpha, rec_ell, rec_bound, rec_eps, rec_m, base.n);
            // Message cells only mean anything against the generator the
            // lists were produced with, so refuse to systematize silently.
            if (!base.systematic)
                throw ValidationError(
                    "recover: local modes need a systematic base code (generate it with --systematic)");
            if (rec_mode == "allr") {
                const auto rec = build_tensor_recovery(base, rec_t, params, rec_seed);
                if (tuple.n != rec.code.n_total)
                    throw ValidationError("recover: tuple length does not match the tensor block length");
                std::vector<std::vector<fe_t>> msgs;
                for (std::uint64_t member = 0; member < rec.family->family_size(); ++member) {
                    std::vector<fe_t> msg(rec.code.k_total, 0);
                    bool flagged = false;
                    for (std::size_t cell = 0; cell < rec.code.k_total && !flagged; ++cell) {
                        TupleOracle oracle(tuple);
                        const auto res = rec.family->decode(member, rec.code.message_cell(cell), oracle);
                        flagged = res.flagged;
                        msg[cell] = res.value;
                    }
                    if (!flagged) msgs.push_back(std::move(msg));
                }
                std::sort(msgs.begin(), msgs.end());
                msgs.erase(std::unique(msgs.begin(), msgs.end()), msgs.end());
                emit(messages_to_json(msgs).dump(2), rec_out);
                return 0;
            }
            if (rec_mode == "compose" || rec_mode == "globalize") {
                TensorCode tensor = tensor_power(base, rec_t);
                const std::size_t kh = rec_kh == 0 ? tensor.k_total : rec_kh;
                LdcPtr ldc = rec_ldc == "hadamard" ? hadamard_ldc(base.field, kh, rec_reps) : identity_ldc(kh);
                const ComposedCode code = make_composed_code(std::move(tensor), std::move(ldc));
                ComposeParams cparams;
                cparams.allr = params;
                if (rec_mode == "compose") {
                    const ComposedRecoverer crec = compose_llr(code, cparams, rec_seed);
                    std::vector<std::vector<fe_t>> msgs;
                    for (std::uint64_t member = 0; member < crec.algorithm_count(); ++member) {
                        std::vector<fe_t> msg(code.message_length(), 0);
                        for (std::size_t i = 0; i < msg.size(); ++i) {
                            TupleOracle oracle(tuple);
                            Rng rng(split_seed(rec_seed, {0xc11, member, i}));
                            msg[i] = crec.run(member, i, oracle, rng).value;
                        }
                        msgs.push_back(std::move(msg));
                    }
                    std::sort(msgs.begin(), msgs.end());
                    msgs.erase(std::unique(msgs.begin(), msgs.end()), msgs.end());
                    emit(messages_to_json(msgs).dump(2), rec_out);
                } else {
                    auto msgs = globalize(code, cparams, tuple, GlobalizeParams{}, rec_seed);
                    if (!rec_unfiltered) {
                        const ComposedRecoverer crec = compose_llr(code, cparams, rec_seed);
                        msgs = filter_by_radius(
                            msgs, [&code](const std::vector<fe_t>& m) { return code.encode(m); }, tuple,
                            crec.radius());
                    }
                    emit(messages_to_json(msgs).dump(2), rec_out);
                }
                return 0;
            }
            throw ValidationError("recover: unknown mode '" + rec_mode + "'");
        }
        if (gv->parsed()) {
            if (gv_decode->parsed()) {
                auto any = load_code(gvd_code);
                auto* cc = std::get_if<ConcatCode>(&any);
                if (cc == nullptr) throw ValidationError("gv decode: --code must hold a concatenated code");
                const Word received = load_word(gvd_received);
                GvDecodeParams params;
                if (!gvd_alpha_in.empty()) params.alpha_in = parse_rational(gvd_alpha_in);
                if (!gvd_alpha_out.empty()) params.alpha_out = parse_rational(gvd_alpha_out);
                const auto res = gv_unique_decode(*cc, received.symbols, params);
                json j{{"ok", res.ok},
                       {"message", res.message},
                       {"errors", res.errors},
                       {"list_size", res.list_size}};
                emit(j.dump(2), gvd_out);
                return res.ok ? 0 : 1;
            }
            const auto res = gv_feasibility(gvf_rho, gvf_eps, gvf_c);
            json j{{"rho", res.rho},           {"eps", res.eps},
                   {"c", res.c},               {"rho_in", res.rho_in},
                   {"rho_out", res.rho_out},   {"decode_radius", res.decode_radius},
                   {"half_distance", res.half_distance}, {"feasible", res.feasible}};
            std::cout << j.dump(2) << std::endl;
            return 0;
        }
        if (experiment->parsed()) {
            const ExperimentConfig config = load_config(exp_config);
            const ExperimentReport rep = run_experiment(config);
            write_report_files(config, rep);
            if (config.output.empty()) std::cout << report_to_json(rep) << std::endl;
            return 0;
        }
        if (report_cmd->parsed()) {
            const json j = json::parse(read_file(rep_path), nullptr, false);
            if (j.is_discarded() || !j.contains("per_trial"))
                throw ValidationError("report: not a report file: " + rep_path);
            std::ostringstream out;
            out << "trial,success,metric,queries_total,queries_max,list_size,detail,wall_ms\n";
            for (const auto& t : j.at("per_trial"))
                out << t.at("trial").get<std::size_t>() << ',' << (t.at("success").get<bool>() ? 1 : 0) << ','
                    << t.at("metric").get<double>() << ',' << t.at("queries_total").get<std::uint64_t>() << ','
                    << t.at("queries_max").get<std::uint64_t>() << ',' << t.at("list_size").get<std::uint64_t>()
                    << ',' << t.at("detail").get<std::string>() << ',' << t.at("wall_ms").get<double>() << '\n';
            emit(out.str(), rep_out);
            return 0;
        }
        throw ValidationError("no subcommand given");
    } catch (const GuardError& e) {
        std::cerr << "guard overflow: " << e.what() << std::endl;
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}

}  // namespace tlr
