#include "sturmian/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "sturmian/census.hpp"
#include "sturmian/json_io.hpp"
#include "sturmian/mapping.hpp"
#include "sturmian/render.hpp"
#include "sturmian/returns.hpp"

namespace sturmian::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

void emit(const Json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text;
}

void check_census_guard(long long n) {
    if (n > census_limit()) {
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " exceeds the enumeration guard " +
                                    std::to_string(census_limit()) +
                                    " (set STURMIAN_BRUTE_LIMIT to raise)");
    }
}

int cmd_count(long long n, const std::string& method, std::ostream& out) {
    CensusDoc doc;
    doc.n = n;
    doc.formula_count = sturmian_count(n);
    doc.palindrome_formula = palindrome_count(n);
    if (method == "brute") {
        check_census_guard(n);
        BruteCensus brute = brute_force_census(n);
        doc.brute_count = brute.sturmian;
        doc.palindrome_brute = brute.palindromic;
    } else if (method == "geometric") {
        check_census_guard(n);
        doc.geometric_count = geometric_count(n);
    } else if (method != "formula") {
        throw std::invalid_argument("unknown census method '" + method + "'");
    }
    emit(to_json(doc), out);
    return kOk;
}

int cmd_palindromes(long long n, bool list, std::ostream& out) {
    Json j;
    j["n"] = n;
    j["count"] = palindrome_count(n).str();
    if (list) {
        auto words = palindrome_words(n);
        std::sort(words.begin(), words.end());
        Json arr = Json::array();
        for (const Word& w : words) arr.push_back(w.str());
        j["words"] = std::move(arr);
    } else {
        j["words"] = nullptr;
    }
    emit(j, out);
    return kOk;
}

int cmd_map_line(const std::string& line_text, long long n, std::ostream& out) {
    emit(to_json(image_words(GridLine::parse(line_text), n)), out);
    return kOk;
}

int cmd_locate(const std::string& word_text, std::ostream& out) {
    Word w = Word::from_string(word_text);
    GridLine line = locate_line(w);
    ImageSet image = image_words(line, static_cast<long long>(w.size()));
    auto entry = std::find_if(image.entries.begin(), image.entries.end(),
                              [&](const ImageEntry& e) { return e.word == w; });
    if (entry == image.entries.end()) {
        throw std::logic_error("locate: " + line.str() + " does not contain '" + w.str() + "'");
    }
    emit(locate_json(w, line, entry->split), out);
    return kOk;
}

int cmd_returns(const std::string& line_text, const std::string& factor_text,
                long long horizon, std::ostream& out) {
    GridLine line = GridLine::parse(line_text);
    Word factor = Word::from_string(factor_text);
    if (horizon <= 0) horizon = 4 * line.a() + static_cast<long long>(factor.size());
    ReturnReport report = returns_of_factor(line, factor, horizon);
    emit(to_json(report), out);
    return report.pass ? kOk : kVerifyFailed;
}

int cmd_extend(const std::string& word_text, std::ostream& out) {
    Word w = Word::from_string(word_text);
    FullContactExtension ext = extend_to_full_contact(w);
    emit(to_json(ext, w), out);
    return kOk;
}

int cmd_render(const std::string& line_text, const std::string& alpha_text,
               const std::string& rho_text, long long n, const std::string& word_text,
               const std::string& format, const std::string& out_path, long long cell,
               std::ostream& out) {
    RenderSpec spec;
    spec.n = n;
    spec.cell = cell;
    if (!line_text.empty()) spec.line = GridLine::parse(line_text);
    if (!alpha_text.empty() || !rho_text.empty()) {
        if (alpha_text.empty() || rho_text.empty()) {
            throw std::invalid_argument("render: --alpha and --rho go together");
        }
        spec.defining = DefiningLine{parse_rational(alpha_text), parse_rational(rho_text)};
    }
    if (!word_text.empty()) spec.word = Word::from_string(word_text);
    if (format == "svg") spec.format = RenderFormat::svg;
    else if (format == "ascii") spec.format = RenderFormat::ascii;
    else throw std::invalid_argument("render: format must be svg or ascii");
    write_output(render(spec), out_path, out);
    return kOk;
}

int verify_partition_suite(long long n, std::ostream& out) {
    check_census_guard(n);
    bool all = true;
    for (long long k = 1; k <= n; ++k) {
        PartitionReport report = verify_partition(k);
        out << "partition n=" << k << ": " << (report.pass ? "pass" : "FAIL")
            << " (" << report.brute_count << " words)\n";
        all = all && report.pass;
    }
    return all ? kOk : kVerifyFailed;
}

int verify_census_suite(long long n, std::ostream& out) {
    check_census_guard(n);
    bool all = true;
    for (long long k = 1; k <= n; ++k) {
        Int formula = sturmian_count(k);
        Int brute = brute_force_census(k).sturmian;
        Int geometric = geometric_count(k);
        bool ok = formula == brute && formula == geometric;
        out << "census n=" << k << ": formula=" << formula << " brute=" << brute
            << " geometric=" << geometric << " " << (ok ? "pass" : "FAIL") << "\n";
        all = all && ok;
    }
    return all ? kOk : kVerifyFailed;
}

int verify_identity_suite(long long n, std::ostream& out) {
    bool all = true;
    for (long long k = 1; k <= n; ++k) {
        TotientSumIdentity id = totient_sum_identity(k);
        bool ok = id.lhs == id.rhs;
        if (!ok || k == n) {
            out << "identity n=" << k << ": lhs=" << id.lhs << " rhs=" << id.rhs << " "
                << (ok ? "pass" : "FAIL") << "\n";
        }
        all = all && ok;
    }
    return all ? kOk : kVerifyFailed;
}

int verify_palindromes_suite(long long n, std::ostream& out) {
    check_census_guard(n);
    bool all = true;
    for (long long k = 1; k <= n; ++k) {
        BruteCensus brute = brute_force_census(k);
        auto words = palindrome_words(k);
        std::sort(words.begin(), words.end());
        std::vector<Word> expected;
        for (const Word& w : brute.words) {
            if (is_palindrome(w)) expected.push_back(w);
        }
        std::sort(expected.begin(), expected.end());
        bool ok = palindrome_count(k) == Int(brute.palindromic) && words == expected;
        out << "palindromes n=" << k << ": formula=" << palindrome_count(k)
            << " brute=" << brute.palindromic << " " << (ok ? "pass" : "FAIL") << "\n";
        all = all && ok;
    }
    return all ? kOk : kVerifyFailed;
}

int verify_returns_suite(long long n, std::ostream& out) {
    bool all = true;
    for (long long a = 2; a <= n; ++a) {
        for (long long b = 1; b < a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            Word host = factor_from_residue(a, b, 0, 4 * a);
            for (long long len = 1; len <= a; ++len) {
                std::vector<Word> factors;
                for (long long i = 0; i + len <= 4 * a; ++i) {
                    std::vector<std::uint8_t> block;
                    for (long long k = 0; k < len; ++k) {
                        block.push_back(host[static_cast<std::size_t>(i + k)]);
                    }
                    factors.emplace_back(std::move(block));
                }
                std::sort(factors.begin(), factors.end());
                factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
                for (const Word& u : factors) {
                    ResidueInterval interval = residue_interval(a, b, u);
                    bool ok = !interval.empty_set && interval.contact == interval.c2;
                    if (ok) {
                        GridLine l = GridLine::make(a, b, 0);
                        ReturnReport report =
                            returns_of_factor(l, u, 4 * a + static_cast<long long>(u.size()));
                        ok = report.pass && report.distinct_returns.size() <= 2;
                    }
                    if (!ok) {
                        out << "returns a=" << a << " b=" << b << " u=" << u.str() << ": FAIL\n";
                        all = false;
                    }
                }
            }
        }
    }
    bool fib = verify_two_returns_aperiodic(10, 2000);
    out << "returns grid a<=" << n << ": " << (all ? "pass" : "FAIL") << "\n";
    out << "returns fibonacci (len<=10, prefix 2000): " << (fib ? "pass" : "FAIL") << "\n";
    return (all && fib) ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact geometry of finite Sturmian words: censuses, the line-to-word "
                 "mapping, palindromes, return words, and figure rendering"};
    app.name("sturmian");
    app.require_subcommand(1);

    long long count_n = 0;
    std::string count_method = "formula";
    auto* count = app.add_subcommand("count", "Census of length-n Sturmian words");
    count->add_option("n", count_n, "word length")->required();
    count->add_option("--method", count_method, "formula | brute | geometric")
        ->check(CLI::IsMember({"formula", "brute", "geometric"}));

    long long pal_n = 0;
    bool pal_list = false;
    auto* palindromes = app.add_subcommand("palindromes", "Census of Sturmian palindromes");
    palindromes->add_option("n", pal_n, "word length")->required();
    palindromes->add_flag("--list", pal_list, "also list the words");

    std::string map_line_text;
    long long map_n = 0;
    auto* map_line = app.add_subcommand("map-line", "Image set m(l) of a grid line");
    map_line->add_option("--line", map_line_text, "grid line a:b:c")->required();
    map_line->add_option("--n", map_n, "word length")->required();

    std::string locate_word;
    auto* locate = app.add_subcommand("locate", "Partition line of a Sturmian word");
    locate->add_option("--word", locate_word, "binary word")->required();

    std::string verify_suite;
    long long verify_n = 0;
    auto* verify = app.add_subcommand("verify", "Run a property suite, exit 0/1");
    verify->add_option("suite", verify_suite, "partition | census | identity | palindromes | returns")
        ->required()
        ->check(CLI::IsMember({"partition", "census", "identity", "palindromes", "returns"}));
    verify->add_option("--n", verify_n, "bound for the suite")->required();

    std::string returns_line, returns_factor;
    long long returns_horizon = 0;
    auto* returns = app.add_subcommand("returns", "Return words of a factor along a line");
    returns->add_option("--line", returns_line, "grid line a:b:c")->required();
    returns->add_option("--factor", returns_factor, "binary factor")->required();
    returns->add_option("--horizon", returns_horizon, "word length to scan (default 4a+|u|)");

    std::string render_line, render_alpha, render_rho, render_word, render_format = "svg",
                render_out;
    long long render_n = 0, render_cell = 32;
    auto* render_cmd = app.add_subcommand("render", "Draw the grid, a line, and a broken line");
    render_cmd->add_option("--line", render_line, "grid line a:b:c");
    render_cmd->add_option("--alpha", render_alpha, "defining-line slope p/q");
    render_cmd->add_option("--rho", render_rho, "defining-line intercept p/q");
    render_cmd->add_option("--n", render_n, "grid size")->required();
    render_cmd->add_option("--word", render_word, "binary word of length n");
    render_cmd->add_option("--format", render_format, "svg | ascii")
        ->check(CLI::IsMember({"svg", "ascii"}));
    render_cmd->add_option("--out", render_out, "output path (default stdout)");
    render_cmd->add_option("--cell", render_cell, "cell size in pixels (svg)");

    std::string extend_word;
    auto* extend = app.add_subcommand("extend", "Extend a word to full grid contact");
    extend->add_option("--word", extend_word, "binary word")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (count->parsed()) return cmd_count(count_n, count_method, out);
        if (palindromes->parsed()) return cmd_palindromes(pal_n, pal_list, out);
        if (map_line->parsed()) return cmd_map_line(map_line_text, map_n, out);
        if (locate->parsed()) return cmd_locate(locate_word, out);
        if (returns->parsed()) return cmd_returns(returns_line, returns_factor, returns_horizon, out);
        if (extend->parsed()) return cmd_extend(extend_word, out);
        if (render_cmd->parsed()) {
            return cmd_render(render_line, render_alpha, render_rho, render_n, render_word,
                              render_format, render_out, render_cell, out);
        }
        if (verify->parsed()) {
            if (verify_n < 1) throw std::invalid_argument("verify: --n must be >= 1");
            if (verify_suite == "partition") return verify_partition_suite(verify_n, out);
            if (verify_suite == "census") return verify_census_suite(verify_n, out);
            if (verify_suite == "identity") return verify_identity_suite(verify_n, out);
            if (verify_suite == "palindromes") return verify_palindromes_suite(verify_n, out);
            return verify_returns_suite(verify_n, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace sturmian::cli
