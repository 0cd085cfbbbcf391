// Command-line front end: field discovery, code generation, stream
// encode/decode, planners, and the built-in decoding walkthrough.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fmds/codec.hpp"
#include "fmds/demo.hpp"
#include "fmds/descriptor.hpp"
#include "fmds/fieldsearch.hpp"
#include "fmds/mdscode.hpp"
#include "fmds/planner.hpp"

namespace {

using namespace fmds;

constexpr int kExitOk = 0;
constexpr int kExitDecodeFailure = 1;
constexpr int kExitUsage = 2;

Rational parse_rate(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("rate must be a fraction a/b");
    const long long num = std::stoll(s.substr(0, slash));
    const long long den = std::stoll(s.substr(slash + 1));
    return rational(num, den);
}

struct FieldCandidate {
    std::uint64_t p = 0;
    std::uint64_t beta = 0;
    double bits = 0;  // beta * log2(p), for ordering without evaluating p^beta
};

std::vector<FieldCandidate> field_candidates(std::uint64_t n, std::uint64_t bound) {
    std::vector<FieldCandidate> out;
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        if (n % p == 0) continue;
        const std::uint64_t beta = n == 1 ? 1 : order_mod(p, n);
        out.push_back({p, beta, static_cast<double>(beta) * std::log2(static_cast<double>(p))});
    }
    std::sort(out.begin(), out.end(), [](const FieldCandidate& a, const FieldCandidate& b) {
        if (a.bits != b.bits) return a.bits < b.bits;
        return a.p < b.p;
    });
    return out;
}

std::string field_label(std::uint64_t p, std::uint64_t beta) {
    if (beta == 1) return "GF(" + std::to_string(p) + ")";
    return "GF(" + std::to_string(p) + "^" + std::to_string(beta) + ")";
}

void print_candidates(const std::vector<FieldCandidate>& cands, std::size_t limit) {
    for (std::size_t i = 0; i < cands.size() && i < limit; ++i) {
        std::cout << "  " << field_label(cands[i].p, cands[i].beta) << "  beta=" << cands[i].beta;
        if (cands[i].beta == 1) std::cout << "  (prime field, preferred)";
        std::cout << "\n";
    }
}

// token stream with line numbers for error reporting
struct SymbolReader {
    std::istream& in;
    std::size_t line_no = 0;
    std::istringstream line;

    explicit SymbolReader(std::istream& s) : in(s) {}

    std::optional<std::pair<std::uint64_t, std::size_t>> next() {
        for (;;) {
            std::string tok;
            if (line >> tok) {
                try {
                    return std::make_pair(std::stoull(tok), line_no);
                } catch (const std::exception&) {
                    throw std::invalid_argument("line " + std::to_string(line_no) +
                                                ": bad symbol '" + tok + "'");
                }
            }
            std::string raw;
            if (!std::getline(in, raw)) return std::nullopt;
            ++line_no;
            line = std::istringstream(raw);
        }
    }
};

int run_encode_decode(bool encoding, const std::string& code_path, const std::string& in_path,
                      const std::string& out_path) {
    const Code code = load_descriptor_file(code_path);
    const Field& f = code.field();
    const std::uint64_t q = f.order();
    const std::size_t block = encoding ? code.dimension() : code.length();

    std::ifstream fin;
    std::ofstream fout;
    if (!in_path.empty()) {
        fin.open(in_path);
        if (!fin) throw std::invalid_argument("cannot open input file: " + in_path);
    }
    if (!out_path.empty()) {
        fout.open(out_path);
        if (!fout) throw std::invalid_argument("cannot open output file: " + out_path);
    }
    std::istream& in = in_path.empty() ? std::cin : fin;
    std::ostream& out = out_path.empty() ? std::cout : fout;

    SymbolReader reader(in);
    std::vector<Fe> buf;
    buf.reserve(block);
    std::size_t block_no = 0;
    bool all_ok = true;

    for (;;) {
        buf.clear();
        while (buf.size() < block) {
            auto tok = reader.next();
            if (!tok) break;
            const auto [value, line_no] = *tok;
            if (value >= q) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": symbol " +
                                            std::to_string(value) + " outside " + f.name());
            }
            buf.push_back(Fe{value});
        }
        if (buf.empty()) break;
        if (buf.size() < block) {
            throw std::invalid_argument("short final block: got " + std::to_string(buf.size()) +
                                        " symbols, need " + std::to_string(block) +
                                        " (no implicit padding)");
        }

        if (encoding) {
            const auto cw = encode(code, buf);
            for (std::size_t i = 0; i < cw.size(); ++i) out << (i ? " " : "") << cw[i].v;
            out << "\n";
        } else {
            const DecodeOutcome res = decode(code, buf);
            if (!res.ok()) {
                const char* stage = "";
                switch (res.failed_stage) {
                    case DecodeStage::kernel: stage = "kernel"; break;
                    case DecodeStage::locator: stage = "locator"; break;
                    case DecodeStage::magnitudes: stage = "magnitudes"; break;
                    case DecodeStage::final_check: stage = "final check"; break;
                    default: break;
                }
                std::cerr << "block " << block_no << ": FAIL too many errors (stage: " << stage
                          << ")\n";
                all_ok = false;
            } else {
                if (res.positions.empty()) {
                    std::cerr << "block " << block_no << ": ok\n";
                } else {
                    std::cerr << "block " << block_no << ": corrected "
                              << res.positions.size() << " error(s) at position(s)";
                    for (std::size_t p : res.positions) std::cerr << " " << p;
                    std::cerr << "\n";
                }
                for (std::size_t i = 0; i < res.data.size(); ++i) {
                    out << (i ? " " : "") << res.data[i].v;
                }
                out << "\n";
            }
        }
        ++block_no;
    }
    return all_ok ? kExitOk : kExitDecodeFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MDS codes from Fourier matrices over finite fields"};
    app.require_subcommand(1);

    // field
    auto* sc_field = app.add_subcommand("field", "fields containing a primitive n-th root of unity");
    std::uint64_t field_n = 0;
    std::optional<std::uint64_t> field_p;
    std::size_t field_limit = 12;
    sc_field->add_option("--n", field_n, "matrix length n")->required();
    sc_field->add_option("--p", field_p, "characteristic to test");
    sc_field->add_option("--limit", field_limit, "rows to print");

    // gen
    auto* sc_gen = app.add_subcommand("gen", "emit a code descriptor");
    std::uint64_t gen_n = 0, gen_r = 0, gen_p = 0, gen_b = 0, gen_k = 1;
    std::string gen_out;
    sc_gen->add_option("--n", gen_n, "length")->required();
    sc_gen->add_option("--r", gen_r, "dimension")->required();
    sc_gen->add_option("--p", gen_p, "characteristic")->required();
    sc_gen->add_option("--b", gen_b, "start row (default 0)");
    sc_gen->add_option("--k", gen_k, "row step, gcd(n, k) = 1 (default 1)");
    sc_gen->add_option("--out", gen_out, "write descriptor to file instead of stdout");

    // encode / decode
    auto* sc_enc = app.add_subcommand("encode", "encode r-symbol blocks to n-symbol blocks");
    auto* sc_dec = app.add_subcommand("decode", "decode n-symbol blocks, correcting errors");
    std::string enc_code, enc_in, enc_out, dec_code, dec_in, dec_out;
    sc_enc->add_option("--code", enc_code, "code descriptor file")->required();
    sc_enc->add_option("--in", enc_in, "input file (default stdin)");
    sc_enc->add_option("--out", enc_out, "output file (default stdout)");
    sc_dec->add_option("--code", dec_code, "code descriptor file")->required();
    sc_dec->add_option("--in", dec_in, "input file (default stdin)");
    sc_dec->add_option("--out", dec_out, "output file (default stdout)");

    // plan
    auto* sc_plan = app.add_subcommand("plan", "parameters for a required rate and capability");
    std::string plan_rate;
    long long plan_errors = 0;
    std::optional<std::uint64_t> plan_p;
    sc_plan->add_option("--rate", plan_rate, "target rate a/b")->required();
    sc_plan->add_option("--errors", plan_errors, "errors to correct")->required();
    sc_plan->add_option("--p", plan_p, "required characteristic");

    // series
    auto* sc_series = app.add_subcommand("series", "code series with a fixed rate");
    std::string series_rate, series_primes;
    std::optional<std::uint64_t> series_p;
    std::size_t series_count = 6;
    sc_series->add_option("--rate", series_rate, "rate r/n")->required();
    sc_series->add_option("--p", series_p, "characteristic for the multiples series");
    sc_series->add_option("--count", series_count, "entries to print");
    sc_series->add_option("--primes", series_primes, "comma-separated primes for prime fields");

    // demo
    app.add_subcommand("demo", "decoding walkthrough on the (12,6,7) code over GF(13)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sc_field->parsed()) {
            if (field_p) {
                if (*field_p != 0 && field_n % *field_p == 0) {
                    std::cerr << "no field of characteristic " << *field_p
                              << " contains a primitive " << field_n
                              << "-th root of unity (the characteristic divides n)\n";
                    return kExitUsage;
                }
                const Field f = find_field(field_n, *field_p);
                std::cout << field_label(f.characteristic(), f.degree())
                          << "  beta=" << f.degree()
                          << (f.degree() == 1 ? "  (prime field, preferred)" : "") << "\n";
                return kExitOk;
            }
            std::cout << "fields with a primitive " << field_n << "-th root of unity:\n";
            const auto cands = field_candidates(field_n, std::max<std::uint64_t>(field_n + 1, 100));
            print_candidates(cands, field_limit);
            return kExitOk;
        }

        if (sc_gen->parsed()) {
            const Field field = find_field(gen_n, gen_p);
            const Fourier ctx = Fourier::make(field, gen_n);
            const Code code(ctx, gen_r, gen_b, gen_k);
            const std::string text = format_descriptor(code);
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(gen_out);
                if (!out) throw std::invalid_argument("cannot open output file: " + gen_out);
                out << text;
            }
            return kExitOk;
        }

        if (sc_enc->parsed()) return run_encode_decode(true, enc_code, enc_in, enc_out);
        if (sc_dec->parsed()) return run_encode_decode(false, dec_code, dec_in, dec_out);

        if (sc_plan->parsed()) {
            const Rational rate = parse_rate(plan_rate);
            const PlanResult plan = plan_code(rate, plan_errors, plan_p);
            std::cout << "minimum length: n >= " << plan.n_min << "\n";
            if (plan.adjusted) {
                std::cout << "adjusted for characteristic " << *plan_p << ": n = " << plan.n
                          << "\n";
            }
            std::cout << "code: (" << plan.n << ", " << plan.r << ", " << plan.d << ")  rate = "
                      << plan.r << "/" << plan.n << " = "
                      << static_cast<double>(plan.r) / static_cast<double>(plan.n)
                      << ", corrects " << (plan.d - 1) / 2 << " errors\n";
            std::cout << "candidate fields:\n";
            if (plan_p) {
                const Field f = find_field(plan.n, *plan_p);
                std::cout << "  " << field_label(f.characteristic(), f.degree())
                          << "  beta=" << f.degree() << "\n";
            } else {
                const auto cands =
                    field_candidates(plan.n, std::max<std::uint64_t>(plan.n + 1, 100));
                print_candidates(cands, 6);
            }
            return kExitOk;
        }

        if (sc_series->parsed()) {
            const Rational rate = parse_rate(series_rate);
            std::vector<SeriesEntry> entries;
            if (!series_primes.empty()) {
                std::vector<std::uint64_t> primes;
                std::stringstream ss(series_primes);
                std::string tok;
                while (std::getline(ss, tok, ',')) primes.push_back(std::stoull(tok));
                entries = prime_series(rate, primes);
                std::cout << "rate " << rate.num << "/" << rate.den << ", prime fields:\n";
            } else if (series_p) {
                entries = series_multiples(static_cast<std::uint64_t>(rate.den),
                                           static_cast<std::uint64_t>(rate.num), *series_p,
                                           series_count);
                std::cout << "rate " << rate.num << "/" << rate.den << ", characteristic "
                          << *series_p << ":\n";
            } else {
                throw std::invalid_argument("series needs --p or --primes");
            }
            for (const auto& e : entries) {
                std::cout << "  (" << e.n << ", " << e.r << ", " << e.d << ")  "
                          << e.field.name() << "\n";
            }
            return kExitOk;
        }

        // demo
        return run_demo(std::cout) == 0 ? kExitOk : kExitDecodeFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
