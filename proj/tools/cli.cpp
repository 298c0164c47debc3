#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include "finprime/algebra.hpp"
#include "finprime/classifier.hpp"
#include "finprime/dfa.hpp"
#include "finprime/factories.hpp"
#include "finprime/gadgets.hpp"
#include "finprime/io.hpp"
#include "finprime/oracle.hpp"
#include "finprime/primality.hpp"
#include "finprime/random.hpp"

namespace finprime::cli {
namespace {

using Line = std::vector<std::pair<std::string, std::string>>;

struct Report {
    std::string command;
    std::string mode;
    std::string digest;
    std::vector<Line> lines;
    std::optional<std::string> document;  // minimize, dot, factory, gadget
    int exit_code = kOk;

    void add(Line l) { lines.push_back(std::move(l)); }

    std::string render(bool json) const {
        if (json) {
            nlohmann::ordered_json j;
            j["command"] = command;
            if (!mode.empty()) j["mode"] = mode;
            j["digest"] = digest;
            j["exit_code"] = exit_code;
            auto arr = nlohmann::ordered_json::array();
            for (const auto& l : lines) {
                nlohmann::ordered_json o = nlohmann::ordered_json::object();
                for (const auto& [k, v] : l) o[k] = v;
                arr.push_back(std::move(o));
            }
            j["lines"] = std::move(arr);
            if (document) j["document"] = *document;
            return j.dump(2) + "\n";
        }
        if (document) return *document;
        std::string out = "command=" + command;
        if (!mode.empty()) out += " mode=" + mode;
        out += " digest=" + digest + "\n";
        for (const auto& l : lines) {
            for (std::size_t i = 0; i < l.size(); ++i) {
                if (i) out += ' ';
                out += l[i].first + "=" + l[i].second;
            }
            out += '\n';
        }
        return out;
    }
};

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

Alphabet parse_alphabet(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> syms;
    std::string s;
    while (in >> s) syms.push_back(s);
    if (syms.empty()) throw InputError("empty alphabet");
    return Alphabet(std::move(syms));
}

Line verdict_line(const Verdict& v, const Alphabet& alphabet) {
    Line l{{"status", status_name(v.status)}, {"branch", v.branch}};
    if (v.witness) l.emplace_back("witness", format_word(alphabet, *v.witness));
    return l;
}

void add_verdict(Report& r, const Verdict& v, const Alphabet& alphabet) {
    r.add(verdict_line(v, alphabet));
    if (!v.notes.empty()) r.add({{"notes", v.notes}});
    r.exit_code = v.prime() ? kOk : kNegative;
}

LinearProfile require_profile(const Dfa& a) {
    if (!is_finite_language(a) || is_empty(a).empty) throw InputError("expected a nonempty finite language");
    auto p = linear_profile(a);
    if (!p) throw InputError("the minimal DFA is not linear");
    return *p;
}

std::optional<Mode> decomposition_mode(const std::string& m) {
    if (m == "cap") return Mode::Intersection;
    if (m == "cup") return Mode::Union;
    if (m == "dnf") return Mode::Dnf;
    return std::nullopt;
}

Verdict decide(const Dfa& a, const std::string& mode, const DecompositionLimits& limits) {
    if (mode == "cap") return decide_intersection_primality(a, limits);
    if (mode == "cup") return decide_union_primality(a);
    if (mode == "dnf") return decide_dnf_primality(a);
    return decide_s_primality(a);
}

struct SweepConfig {
    std::string family = "exhaustive";
    std::size_t max_index = 4;
    std::size_t alphabet_size = 2;
    std::size_t samples = 100;
    std::size_t max_n = 6;
    std::uint64_t seed = 7;
    std::size_t max_factor_states = 4;
    bool mutate = false;
};

Alphabet digit_alphabet(std::size_t k) {
    if (k == 0 || k > 10) throw InputError("alphabet size must be in 1..10");
    std::vector<std::string> syms;
    for (std::size_t i = 0; i < k; ++i) syms.push_back(std::to_string(i));
    return Alphabet(std::move(syms));
}

void run_sweep(Report& r, const SweepConfig& c) {
    const Alphabet alphabet = digit_alphabet(c.alphabet_size);
    OracleLimits olimits;
    olimits.max_factor_states = c.max_factor_states;

    std::size_t instances = 0, skipped = 0, oracle_checked = 0, certificate_checked = 0;
    std::vector<Line> disagreements;

    auto disagree = [&](std::size_t idx, const Dfa& m, std::string what, std::string detail) {
        disagreements.push_back({{"disagreement", std::to_string(idx)},
                                 {"index", std::to_string(m.size())},
                                 {"check", std::move(what)},
                                 {"detail", std::move(detail)}});
    };

    // Returns false when the certificate contradicts the verdict.
    auto certificate = [&](const Dfa& m, const Verdict& v, std::string& detail) {
        if (v.prime()) {
            Word w = intersection_witness(m);
            if (accepts(m, w)) {
                detail = "witness-accepted";
                return false;
            }
            return true;
        }
        Decomposition d = intersection_decomposition(m);
        auto res = verify_decomposition(m, d, olimits);
        if (!res.ok) detail = res.diagnostic;
        return res.ok;
    };

    auto check = [&](std::size_t idx, const Dfa& m, bool want_certificate) {
        ++instances;
        Verdict v;
        try {
            v = decide_intersection_primality(m);
        } catch (const ResourceLimit&) {
            ++skipped;
            return;
        }
        if (c.mutate) v.status = v.prime() ? Status::Composite : Status::Prime;

        bool checked = false;
        try {
            Verdict o = oracle_primality(m, olimits);
            ++oracle_checked;
            checked = true;
            if (o.status != v.status)
                disagree(idx, m, "oracle", "decide=" + status_name(v.status) + ",oracle=" + status_name(o.status));
        } catch (const ResourceLimit&) {
        }
        if (want_certificate || !checked) {
            try {
                std::string detail;
                bool ok = certificate(m, v, detail);
                ++certificate_checked;
                checked = true;
                if (!ok) disagree(idx, m, "certificate", detail);
            } catch (const ResourceLimit&) {
            } catch (const InputError& e) {
                // the verdict's own certificate refused the instance
                ++certificate_checked;
                checked = true;
                disagree(idx, m, "certificate", "refused");
            }
        }
        if (!checked) ++skipped;
    };

    if (c.family == "exhaustive") {
        auto all = enumerate_minimal_adfas(c.max_index, alphabet);
        for (std::size_t i = 0; i < all.size(); ++i) check(i, all[i], false);
    } else {
        Rng rng(c.seed);
        for (std::size_t i = 0; i < c.samples; ++i) {
            Dfa m;
            if (i % 2 == 0) {
                do {
                    std::size_t states = 2 + static_cast<std::size_t>(rng() % (c.max_n + 1));
                    m = minimize(random_adfa(rng, states, alphabet));
                } while (is_empty(m).empty);
            } else {
                std::size_t n = 1 + static_cast<std::size_t>(rng() % c.max_n);
                bool safety = rng() % 2 == 0;
                m = minimize(random_linear(rng, n, alphabet, safety));
            }
            check(i, m, true);
            if (auto p = linear_profile(m); p && p->n >= 1 && is_safety(m)) {
                try {
                    bool fast = has_cep(*p).has_cep;
                    if (fast != oracle_cep(*p)) disagree(i, m, "cep", "has_cep=" + yes(fast));
                } catch (const ResourceLimit&) {
                }
            }
        }
    }

    r.add({{"instances", std::to_string(instances)},
           {"disagreements", std::to_string(disagreements.size())},
           {"skipped", std::to_string(skipped)}});
    r.add({{"oracle_checked", std::to_string(oracle_checked)},
           {"certificate_checked", std::to_string(certificate_checked)}});
    for (auto& l : disagreements) r.add(std::move(l));
    r.exit_code = disagreements.empty() ? kOk : kNegative;
}

}  // namespace

CommandReport run_command(const std::vector<std::string>& argv) {
    CLI::App app{"Primality of finite-language DFAs", "finprime"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Print the report as JSON");

    std::string file, file2, mode = "cap", out_dir, kind;
    bool no_verify = false, verify = false;
    DecompositionLimits limits;
    std::size_t max_factor_states = 4;

    auto* classify = app.add_subcommand("classify", "Structural properties of a DFA");
    classify->add_option("file", file)->required();

    auto* prime = app.add_subcommand("prime", "Decide primality");
    prime->add_option("file", file)->required();
    prime->add_option("--mode", mode)->check(CLI::IsMember({"cap", "cup", "dnf", "s"}));
    prime->add_option("--max-witness-length", limits.max_witness_length);

    auto* decompose = app.add_subcommand("decompose", "Build and verify a decomposition");
    decompose->add_option("file", file)->required();
    decompose->add_option("--mode", mode)->check(CLI::IsMember({"cap", "cup", "dnf"}));
    decompose->add_option("--out", out_dir, "Directory receiving one file per factor");
    decompose->add_flag("--no-verify", no_verify);
    decompose->add_option("--max-factors", limits.max_factors);
    decompose->add_option("--max-candidates", limits.max_candidates);
    decompose->add_option("--max-factor-states", max_factor_states, "Oracle bound used by verification");

    auto* witness = app.add_subcommand("witness", "Intersection primality witness");
    witness->add_option("file", file)->required();
    witness->add_flag("--verify", verify, "Check the witness against every smaller factor");
    witness->add_option("--max-factor-states", max_factor_states);
    witness->add_option("--max-witness-length", limits.max_witness_length);

    auto* oracle = app.add_subcommand("oracle", "Brute-force primality");
    oracle->add_option("file", file)->required();
    oracle->add_option("--max-factor-states", max_factor_states);

    auto* minimize_cmd = app.add_subcommand("minimize", "Canonical minimal DFA");
    minimize_cmd->add_option("file", file)->required();

    auto* equiv = app.add_subcommand("equiv", "Language equivalence");
    equiv->add_option("a", file)->required();
    equiv->add_option("b", file2)->required();

    std::string alphabet_text = "a b", word_text, chain_text;
    std::size_t m_param = 0, k_param = 1, d_param = 0, i_param = 0, l_param = 2;
    std::string letter_text;
    auto* factory = app.add_subcommand("factory", "Emit a factor DFA");
    factory->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"singleton", "cap", "star", "count", "mod", "loop0", "loopd", "chain", "letterpos",
                               "subseq", "skip", "ext"}));
    factory->add_option("file", file, "Linear DFA for profile-based kinds");
    factory->add_option("--alphabet", alphabet_text);
    factory->add_option("--word", word_text);
    factory->add_option("--letter", letter_text);
    factory->add_option("--m", m_param);
    factory->add_option("--k", k_param);
    factory->add_option("--d", d_param);
    factory->add_option("--i", i_param);
    factory->add_option("--l", l_param);
    factory->add_option("--chain", chain_text, "Indices i_0 .. i_m");

    auto* gadget = app.add_subcommand("gadget", "Emit a reduction gadget");
    gadget->add_option("kind", kind)->required()->check(CLI::IsMember({"minimality", "sprime", "primefin", "prime2"}));
    gadget->add_option("file", file)->required();

    auto* dot = app.add_subcommand("dot", "Graphviz export");
    dot->add_option("file", file)->required();

    SweepConfig sc;
    auto* sweep = app.add_subcommand("sweep", "Compare the decision procedure with the oracle");
    sweep->add_option("--family", sc.family)->check(CLI::IsMember({"exhaustive", "random"}));
    sweep->add_option("--max-index", sc.max_index);
    sweep->add_option("--alphabet-size", sc.alphabet_size);
    sweep->add_option("--samples", sc.samples);
    sweep->add_option("--max-n", sc.max_n);
    sweep->add_option("--seed", sc.seed);
    sweep->add_option("--max-factor-states", sc.max_factor_states);
    sweep->add_flag("--mutate", sc.mutate, "Flip every verdict before comparing");

    CommandReport cr;
    if (!argv.empty() && !argv.front().starts_with("-")) {
        bool known = false;
        for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == argv.front();
        if (!known) {
            cr.exit_code = kInputError;
            cr.err = "error: unknown command '" + argv.front() + "'\n" + app.help();
            return cr;
        }
    }
    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        cr.out = app.help();
        return cr;
    } catch (const CLI::CallForAllHelp&) {
        cr.out = app.help("", CLI::AppFormatMode::All);
        return cr;
    } catch (const CLI::ParseError& e) {
        cr.exit_code = kInputError;
        cr.err = std::string("error: ") + e.what() + "\n" + app.help();
        return cr;
    }

    Report r;
    r.command = app.get_subcommands().front()->get_name();
    OracleLimits olimits;
    olimits.max_factor_states = max_factor_states;

    try {
        auto load = [&](const std::string& path) {
            std::string text = read_file(path);
            r.digest = fnv1a(r.digest + text);
            return parse_dfa(text);
        };

        if (classify->parsed()) {
            Dfa a = load(file);
            Dfa m = minimize(a);
            bool finite = is_finite_language(a);
            bool empty = is_empty(a).empty;
            r.add({{"states", std::to_string(a.size())}, {"index", std::to_string(m.size())}});
            Line lang{{"finite", yes(finite)}, {"empty", yes(empty)}};
            auto lw = longest_word_length(a);
            if (lw.finite()) lang.emplace_back("longest", std::to_string(lw.length));
            r.add(lang);
            r.add({{"safety", yes(is_safety(a))},
                   {"cosafety", yes(is_cosafety(a))},
                   {"simple_cosafety", yes(is_simple_cosafety(a))},
                   {"minimal", yes(m.size() == a.size())}});
            if (finite && !empty) {
                auto p = linear_profile(a);
                Line lin{{"linear", yes(p.has_value())}};
                if (p) {
                    lin.emplace_back("n", std::to_string(p->n));
                    auto s = uniform_max_word_letter(*p);
                    lin.emplace_back("sigma_n", s ? p->alphabet.symbol(*s) : "none");
                    auto d = interior_rejecting_state(*p);
                    lin.emplace_back("interior_rejecting", d ? std::to_string(*d) : "none");
                    if (p->n >= 1) {
                        auto cep = has_cep(*p);
                        lin.emplace_back("cep", yes(cep.has_cep));
                        if (cep.breaching) lin.emplace_back("breaching", format_word(p->alphabet, *cep.breaching));
                    }
                }
                r.add(lin);
            }
        } else if (prime->parsed()) {
            r.mode = mode;
            Dfa a = load(file);
            add_verdict(r, decide(a, mode, limits), a.alphabet());
        } else if (decompose->parsed()) {
            r.mode = mode;
            Dfa a = load(file);
            Mode md = *decomposition_mode(mode);
            Verdict v = decide(a, mode, limits);
            if (v.prime()) {
                add_verdict(r, v, a.alphabet());
                r.exit_code = kNegative;  // nothing to decompose
            } else {
                Decomposition d = md == Mode::Intersection ? intersection_decomposition(a, limits)
                                  : md == Mode::Union      ? union_decomposition(a, limits)
                                                           : dnf_decomposition(a, limits);
                r.add({{"status", "Composite"},
                       {"branch", v.branch},
                       {"bound", std::to_string(d.bound)},
                       {"terms", std::to_string(d.terms.size())},
                       {"factors", std::to_string(d.factor_count())}});
                if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
                for (std::size_t t = 0; t < d.terms.size(); ++t)
                    for (const Factor& f : d.terms[t]) {
                        std::string name = md == Mode::Dnf ? "t" + std::to_string(t) + "_" + f.file_name()
                                                           : f.file_name();
                        r.add({{"factor", name}, {"term", std::to_string(t)}, {"states", std::to_string(f.dfa.size())}});
                        if (!out_dir.empty()) {
                            std::ofstream o(std::filesystem::path(out_dir) / name, std::ios::binary);
                            if (!o) throw InputError("cannot write " + name);
                            o << serialize_dfa(f.dfa);
                        }
                    }
                r.exit_code = kOk;
                if (!no_verify) {
                    auto res = verify_decomposition(a, d, olimits);
                    Line l{{"verified", yes(res.ok)}};
                    if (!res.ok) {
                        l.emplace_back("diagnostic", res.diagnostic);
                        if (res.word) l.emplace_back("word", format_word(a.alphabet(), *res.word));
                        r.exit_code = kNegative;
                    }
                    r.add(l);
                }
            }
        } else if (witness->parsed()) {
            Dfa a = load(file);
            Verdict v = decide_intersection_primality(a, limits);
            r.add(verdict_line(v, a.alphabet()));
            if (!v.notes.empty()) r.add({{"notes", v.notes}});
            r.exit_code = v.witness ? kOk : kNegative;
            if (v.witness && verify) {
                bool ok = verify_witness(a, *v.witness, olimits);
                r.add({{"verified", yes(ok)}});
                if (!ok) r.exit_code = kNegative;
            }
        } else if (oracle->parsed()) {
            Dfa a = load(file);
            add_verdict(r, oracle_primality(a, olimits), a.alphabet());
        } else if (minimize_cmd->parsed()) {
            r.document = serialize_dfa(minimize(load(file)));
        } else if (equiv->parsed()) {
            Dfa a = load(file);
            Dfa b = load(file2);
            auto e = equivalent(a, b);
            Line l{{"equivalent", yes(e.equivalent)}};
            if (e.witness) l.emplace_back("witness", format_word(a.alphabet(), *e.witness));
            r.add(l);
            r.exit_code = e.equivalent ? kOk : kNegative;
        } else if (factory->parsed()) {
            r.mode = kind;
            Dfa out;
            static const std::vector<std::string> profile_kinds{"loop0", "loopd", "chain", "letterpos", "skip", "ext"};
            bool from_profile = std::find(profile_kinds.begin(), profile_kinds.end(), kind) != profile_kinds.end();
            if (from_profile) {
                if (file.empty()) throw InputError("factory " + kind + " needs a linear DFA file");
                Dfa a = load(file);
                LinearProfile p = require_profile(a);
                if (kind == "loop0") out = factor_loop_zero(p);
                else if (kind == "loopd") out = factor_loop_d(p, d_param);
                else if (kind == "chain") {
                    IndexChain c;
                    std::istringstream in(chain_text);
                    std::size_t x;
                    while (in >> x) c.push_back(x);
                    out = factor_chain(p, c);
                } else if (kind == "letterpos") out = factor_letter_position(p, p.alphabet.letter(letter_text), i_param);
                else if (kind == "skip") out = factor_skip(p, i_param, l_param);
                else out = factor_extension(p, d_param, parse_word(p.alphabet, word_text));
            } else {
                r.digest = fnv1a(alphabet_text + "|" + word_text);
                if (kind == "mod") {
                    out = mod_counter_dfa(k_param);
                } else {
                    Alphabet al = parse_alphabet(alphabet_text);
                    if (kind == "singleton") out = singleton_dfa(parse_word(al, word_text), al);
                    else if (kind == "cap") out = length_cap_dfa(m_param, al);
                    else if (kind == "star") out = star_word_dfa(parse_word(al, word_text), al);
                    else if (kind == "count") out = letter_count_dfa(al.letter(letter_text), k_param, al);
                    else out = subsequence_excluder(parse_word(al, word_text), al);
                }
            }
            r.document = serialize_dfa(out);
        } else if (gadget->parsed()) {
            r.mode = kind;
            std::string text = read_file(file);
            r.digest = fnv1a(text);
            Dfa out;
            if (kind == "minimality") out = minimality_gadget(parse_digraph(text));
            else if (kind == "sprime") out = sprime_gadget(parse_digraph(text));
            else if (kind == "primefin") out = primefin_gadget(parse_dfa(text));
            else out = prime2_gadget(parse_dfa(text));
            r.document = serialize_dfa(out);
        } else if (dot->parsed()) {
            r.document = to_dot(load(file));
        } else if (sweep->parsed()) {
            r.mode = sc.family;
            std::ostringstream cfg;
            cfg << sc.family << ' ' << sc.max_index << ' ' << sc.alphabet_size << ' ' << sc.samples << ' ' << sc.max_n
                << ' ' << sc.seed << ' ' << sc.max_factor_states << ' ' << sc.mutate;
            r.digest = fnv1a(cfg.str());
            run_sweep(r, sc);
        }
        if (r.digest.empty()) r.digest = fnv1a("");
        cr.exit_code = r.exit_code;
        cr.out = r.render(json);
    } catch (const ResourceLimit& e) {
        cr.exit_code = kResourceLimit;
        cr.err = std::string("resource-limit: ") + e.what() + "\n";
        if (!json) cr.out = "status=ResourceLimit\n";
    } catch (const ParseError& e) {
        cr.exit_code = kInputError;
        cr.err = "input-error: line " + std::to_string(e.line()) + ": " + e.message() + "\n";
    } catch (const Error& e) {
        cr.exit_code = kInputError;
        cr.err = std::string("input-error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        cr.exit_code = kInputError;
        cr.err = std::string("error: ") + e.what() + "\n";
    }
    return cr;
}

}  // namespace finprime::cli
