#include "fmds/descriptor.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fmds {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("descriptor: bad integer for " + std::string(what));
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string format_descriptor(const Code& code) {
    const Field& f = code.field();
    std::ostringstream out;
    out << "p=" << f.characteristic() << "\n";
    out << "beta=" << f.degree() << "\n";
    if (f.degree() > 1) {
        out << "modulus=";
        const auto& mod = f.modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            if (i != 0) out << ",";
            out << mod[i];
        }
        out << "\n";
    }
    out << "omega=" << f.to_int(code.ctx().omega()) << "\n";
    out << "n=" << code.length() << "\n";
    out << "r=" << code.dimension() << "\n";
    out << "start=" << code.start() << "\n";
    out << "step=" << code.step() << "\n";
    return out.str();
}

Code parse_descriptor(std::string_view text) {
    // collect key=value lines, skipping blank lines
    std::vector<std::pair<std::string, std::string>> kv;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("descriptor: line " + std::to_string(line_no) +
                                        " is not key=value");
        }
        kv.emplace_back(std::string(trim(line.substr(0, eq))),
                        std::string(trim(line.substr(eq + 1))));
    }

    const char* expected_with_mod[] = {"p", "beta", "modulus", "omega", "n", "r", "start", "step"};
    const char* expected_plain[] = {"p", "beta", "omega", "n", "r", "start", "step"};

    auto fail_key = [](std::size_t idx, const std::string& got) -> void {
        throw std::invalid_argument("descriptor: unexpected key '" + got + "' at entry " +
                                    std::to_string(idx + 1));
    };

    if (kv.size() != 7 && kv.size() != 8) {
        throw std::invalid_argument("descriptor: expected 7 or 8 key=value lines, got " +
                                    std::to_string(kv.size()));
    }
    const bool has_modulus = kv.size() == 8;
    const char** expected = has_modulus ? expected_with_mod : expected_plain;
    for (std::size_t i = 0; i < kv.size(); ++i) {
        if (kv[i].first != expected[i]) fail_key(i, kv[i].first);
    }

    std::size_t at = 0;
    const std::uint64_t p = parse_u64(kv[at++].second, "p");
    const std::uint64_t beta = parse_u64(kv[at++].second, "beta");
    std::vector<std::uint64_t> modulus;
    if (has_modulus) {
        std::string_view mv = kv[at++].second;
        while (!mv.empty()) {
            const std::size_t comma = mv.find(',');
            modulus.push_back(parse_u64(trim(mv.substr(0, comma)), "modulus"));
            mv = comma == std::string_view::npos ? std::string_view{} : mv.substr(comma + 1);
        }
    }
    const std::uint64_t omega = parse_u64(kv[at++].second, "omega");
    const std::uint64_t n = parse_u64(kv[at++].second, "n");
    const std::uint64_t r = parse_u64(kv[at++].second, "r");
    const std::uint64_t start = parse_u64(kv[at++].second, "start");
    const std::uint64_t step = parse_u64(kv[at++].second, "step");

    if (beta == 1 && has_modulus) {
        throw std::invalid_argument("descriptor: modulus given for a prime field");
    }
    if (beta > 1 && !has_modulus) {
        throw std::invalid_argument("descriptor: modulus required when beta > 1");
    }

    Field field = beta == 1 ? Field::prime(p)
                            : Field::extension(p, static_cast<std::uint32_t>(beta), modulus);
    Fourier ctx(field, n, field.from_int(omega));
    return Code(std::move(ctx), r, start, step);
}

Code load_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open descriptor file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_descriptor(buf.str());
}

}  // namespace fmds
