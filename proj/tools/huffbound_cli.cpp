// Command-line front end: bound queries, redundancy-map export, the
// two-known-probability formula check, dictionary bounds and the
// exhaustive-vs-pruned cross-check.

#include "CLI11.hpp"
#include "json.hpp"

#include "huffbound/conjecture.hpp"
#include "huffbound/enumerate.hpp"
#include "huffbound/huffman.hpp"
#include "huffbound/optimize.hpp"
#include "huffbound/prune.hpp"
#include "huffbound/v2v.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

using json = nlohmann::json;
using namespace huffbound;

namespace {

std::vector<Rational> parse_probs(const std::string& csv) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t sep = csv.find(',', start);
        std::string item =
            sep == std::string::npos ? csv.substr(start) : csv.substr(start, sep - start);
        if (!item.empty()) out.push_back(Rational::parse(item));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return out;
}

SubSource known_sub_source(const std::string& csv) {
    SubSource x = SubSource::of(parse_probs(csv));
    for (const auto& [id, p] : x.entries()) (void)id, (void)p;
    return x;
}

json known_json(const SubSource& x) {
    json arr = json::array();
    for (const auto& [id, p] : x.entries()) arr.push_back({{"symbol", id}, {"probability", p.str()}});
    return arr;
}

json bound_json(const BoundResult& r, const std::string& mode, int digits) {
    json out;
    out["mode"] = mode;
    out["exact"] = r.value.str();
    out["decimal"] = r.value.decimal(digits);
    out["code"] = r.best_code.str();
    json w = json::array();
    for (const auto& [leaf, p] : r.witness) w.push_back({{"leaf", leaf}, {"probability", p.str()}});
    out["witness"] = w;
    return out;
}

int cmd_bound(const std::string& known, std::optional<int> fixed_n, std::optional<int> upto_n,
              bool general, int digits, bool raw, const std::string& psi_dump) {
    SubSource x = known_sub_source(known);
    json out;
    out["known"] = known_json(x);
    if (fixed_n) {
        BoundResult r = r_min_n(x, *fixed_n);
        out.update(bound_json(r, "fixed-n", digits));
        out["n"] = *fixed_n;
    } else if (upto_n) {
        BoundResult r = r_min_upto(x, *upto_n);
        out.update(bound_json(r, "upto-n", digits));
        out["n"] = *upto_n;
    } else if (general) {
        PruneOptions opt;
        opt.dedup = !raw;
        StarResult r = r_min_star(x, opt);
        out.update(bound_json(r.bound, "general", digits));
        if (!x.empty()) {
            out["threshold"] = r.threshold_value;
            out["psi_size"] = r.psi_size;
            out["states_dropped"] = r.stats.infeasible_dropped;
            out["certificates_verified"] = r.stats.certificates_verified;
        }
        if (!psi_dump.empty() && !x.empty()) {
            PruneResult pr = state_search(x, opt);
            std::ofstream f(psi_dump);
            if (!f) throw CLI::ValidationError("--psi-dump", "cannot write " + psi_dump);
            for (const auto& line : describe_psi(x, pr, digits)) f << line << "\n";
        }
    } else {
        throw CLI::ValidationError("bound", "pick one of --n, --upto, --general");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_map(int dims, const std::string& fixed_csv, const Rational& step, const Rational& from,
            const Rational& to, const std::string& out_path, int digits) {
    std::vector<Rational> fixed = parse_probs(fixed_csv);
    std::ofstream f(out_path);
    if (!f) throw CLI::ValidationError("--out", "cannot write " + out_path);
    f << (dims == 1 ? "p1" : "p1,p2");
    f << ",exact,decimal,best_code_id,best_code\n";

    std::map<std::string, int> code_ids;
    auto emit = [&](const std::vector<Rational>& varying) {
        std::vector<Rational> probs = varying;
        probs.insert(probs.end(), fixed.begin(), fixed.end());
        Rational sum;
        for (const auto& p : probs) sum += p;
        if (sum > Rational(1)) return;
        StarResult r = r_min_star(SubSource::of(probs));
        std::string code = r.bound.best_code.canonical().str();
        auto [it, fresh] = code_ids.emplace(code, static_cast<int>(code_ids.size()));
        (void)fresh;
        for (const auto& p : varying) f << p.str() << ",";
        f << "\"" << r.bound.value.str() << "\"," << r.bound.value.decimal(digits) << ","
          << it->second << ",\"" << code << "\"\n";
    };

    for (Rational p1 = from; p1 <= to; p1 += step) {
        if (dims == 1) {
            emit({p1});
        } else {
            for (Rational p2 = from; p2 <= to; p2 += step) emit({p1, p2});
        }
    }
    return 0;
}

int cmd_conjecture(const Rational& step, const Rational& lo, const Rational& hi,
                   const std::string& out_path, int digits) {
    auto mismatches = check_grid(step, lo, hi);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw CLI::ValidationError("--out", "cannot write " + out_path);
        f << "p1,p2,conjecture,engine\n";
        for (const auto& m : mismatches)
            f << m.p1.str() << "," << m.p2.str() << "," << m.conjectured.decimal(digits) << ","
              << m.engine.decimal(digits) << "\n";
    }
    json out;
    out["step"] = step.str();
    out["range"] = {lo.str(), hi.str()};
    out["mismatches"] = mismatches.size();
    std::cout << out.dump(2) << "\n";
    return mismatches.empty() ? 0 : 3;
}

int cmd_v2v(const std::string& base_csv, const std::string& dict_csv,
            const std::string& known_csv, std::optional<long> max_len, int digits) {
    Source base(SubSource::of(parse_probs(base_csv), "a"));
    json out;
    json base_arr = json::array();
    for (const auto& [id, p] : base.entries()) base_arr.push_back({{"symbol", id}, {"probability", p.str()}});
    out["base"] = base_arr;
    if (!dict_csv.empty()) {
        Dictionary dict = Dictionary::parse(dict_csv);
        SubSource ws = word_source(dict, base);
        json words = json::array();
        for (const auto& [id, p] : ws.entries()) words.push_back({{"word", id}, {"probability", p.str()}});
        out["mode"] = "dictionary";
        out["word_source"] = words;
        ClosedFormReal r = v2v_redundancy(dict, base);
        out["redundancy_exact"] = r.str();
        out["redundancy_decimal"] = r.decimal(digits);
        Source word_src(word_source(dict, base));
        json cw;
        for (const auto& [sym, bits] : huffman_tree(word_src).codewords()) cw[sym] = bits;
        out["codewords"] = cw;
    } else {
        if (!max_len) throw CLI::ValidationError("v2v", "--known-words requires --max-len");
        Dictionary dict = Dictionary::parse(known_csv);
        V2VBound b = v2v_prune_bound(dict, base, *max_len);
        out["mode"] = "prune-bound";
        out["max_len"] = *max_len;
        out["bound_exact"] = b.value.str();
        out["bound_decimal"] = b.value.decimal(digits);
        out["per_word_bound_exact"] = b.star.bound.value.str();
        out["expected_length_bound"] = b.denominator.str();
        out["threshold"] = b.star.threshold_value;
        out["psi_size"] = b.star.psi_size;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_oracle(const std::string& known, int upto, int digits) {
    SubSource x = known_sub_source(known);
    EnumLimits limits;
    BoundResult exhaustive = x.empty() ? r_min_star_oracle(x) : r_min_upto(x, upto, limits);

    PruneOptions dedup_opt, raw_opt;
    raw_opt.dedup = false;
    StarResult pruned = r_min_star(x, dedup_opt);
    StarResult pruned_raw = r_min_star(x, raw_opt);

    json out;
    out["known"] = known_json(x);
    out["upto"] = upto;
    out["exhaustive"] = {{"exact", exhaustive.value.str()},
                         {"decimal", exhaustive.value.decimal(digits)},
                         {"code", exhaustive.best_code.str()}};
    out["pruned"] = {{"exact", pruned.bound.value.str()},
                     {"decimal", pruned.bound.value.decimal(digits)},
                     {"code", pruned.bound.best_code.str()},
                     {"psi_size", pruned.psi_size},
                     {"psi_size_raw", pruned_raw.psi_size},
                     {"threshold", pruned.threshold_value}};
    bool eq = compare(exhaustive.value, pruned.bound.value) == Ordering::Equal &&
              compare(pruned.bound.value, pruned_raw.bound.value) == Ordering::Equal;
    out["equal"] = eq;
    json counts = json::array();
    for (int n = 2; n <= upto; ++n) {
        size_t listed = all_codes(n, false).size();
        counts.push_back({{"n", n},
                          {"trajectories", listed},
                          {"formula", trajectory_count(n).get_str()},
                          {"distinct", all_codes(n, true).size()}});
    }
    out["enumeration"] = counts;
    std::cout << out.dump(2) << "\n";
    return eq ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lower bounds on Huffman-code redundancy with partial knowledge"};
    app.require_subcommand(1);
    int digits = 6;
    app.add_option("--digits", digits, "decimal places in reported values")->capture_default_str();

    auto* bound = app.add_subcommand("bound", "lower bound for a set of known probabilities");
    std::string known;
    std::optional<int> fixed_n, upto_n;
    bool general = false, raw = false;
    std::string psi_dump;
    bound->add_option("--known", known, "comma-separated probabilities, e.g. 49/100,0.5");
    bound->add_option("--n", fixed_n, "alphabet of exactly N symbols");
    bound->add_option("--upto", upto_n, "alphabets of 2..N symbols");
    bound->add_flag("--general", general, "any alphabet size");
    bound->add_flag("--raw", raw, "keep duplicate search states");
    bound->add_option("--psi-dump", psi_dump, "write one line per searched code");

    auto* map = app.add_subcommand("map", "CSV sweep of the general bound");
    int dims = 1;
    std::string fixed_csv, out_path;
    std::string step_s = "1/100", from_s, to_s;
    map->add_option("--dims", dims, "number of varying probabilities (1 or 2)")
        ->check(CLI::Range(1, 2));
    map->add_option("--fixed", fixed_csv, "additional fixed probabilities");
    map->add_option("--step", step_s, "grid step");
    map->add_option("--from", from_s, "lower end of the sweep (default: step)");
    map->add_option("--to", to_s, "upper end of the sweep (default: 1 - step)");
    map->add_option("--out", out_path, "output CSV path")->required();

    auto* conj = app.add_subcommand("conjecture", "two-known-probability formula check");
    std::string cstep_s = "1/50", lo_s, hi_s, cout_path;
    bool full = false;
    conj->add_option("--step", cstep_s, "grid step");
    conj->add_flag("--full", full, "step 1/1000 over the widest grid (slow)");
    conj->add_option("--lo", lo_s, "lower grid end (default: step)");
    conj->add_option("--hi", hi_s, "upper grid end (default: 1 - step)");
    conj->add_option("--out", cout_path, "mismatch CSV path");

    auto* v2v = app.add_subcommand("v2v", "dictionary redundancy and search-pruning bounds");
    std::string base_csv, dict_csv, known_words;
    std::optional<long> max_len;
    v2v->add_option("--base", base_csv, "base alphabet probabilities")->required();
    v2v->add_option("--dict", dict_csv, "full dictionary, e.g. a1a1,a1a2,a2");
    v2v->add_option("--known-words", known_words, "words every candidate dictionary contains");
    v2v->add_option("--max-len", max_len, "maximum word length for the bound");

    auto* oracle = app.add_subcommand("oracle", "exhaustive vs pruned cross-check");
    std::string oknown;
    int oupto = 3;
    oracle->add_option("--known", oknown, "comma-separated probabilities");
    oracle->add_option("--upto", oupto, "exhaustive alphabet-size limit")->required();

    try {
        app.parse(argc, argv);
        if (bound->parsed())
            return cmd_bound(known, fixed_n, upto_n, general, digits, raw, psi_dump);
        if (map->parsed()) {
            Rational step = Rational::parse(step_s);
            Rational from = from_s.empty() ? step : Rational::parse(from_s);
            Rational to = to_s.empty() ? Rational(1) - step : Rational::parse(to_s);
            return cmd_map(dims, fixed_csv, step, from, to, out_path, digits);
        }
        if (conj->parsed()) {
            Rational step = full ? Rational(1, 1000) : Rational::parse(cstep_s);
            Rational lo = lo_s.empty() ? step : Rational::parse(lo_s);
            Rational hi = hi_s.empty() ? Rational(1) - step : Rational::parse(hi_s);
            return cmd_conjecture(step, lo, hi, cout_path, digits);
        }
        if (v2v->parsed()) {
            if (dict_csv.empty() == known_words.empty())
                throw CLI::ValidationError("v2v", "pass exactly one of --dict, --known-words");
            return cmd_v2v(base_csv, dict_csv, known_words, max_len, digits);
        }
        if (oracle->parsed()) return cmd_oracle(oknown, oupto, digits);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
