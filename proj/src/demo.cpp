#include "fmds/demo.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "fmds/codec.hpp"
#include "fmds/fieldsearch.hpp"
#include "fmds/mdscode.hpp"

namespace fmds {

namespace {

std::vector<Fe> fe_vec(std::initializer_list<std::uint64_t> vals) {
    std::vector<Fe> out;
    out.reserve(vals.size());
    for (auto v : vals) out.push_back(Fe{v});
    return out;
}

std::string join(const std::vector<Fe>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ' ';
        out += std::to_string(v[i].v);
    }
    return out;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

int run_demo(std::ostream& out) {
    bool ok = true;
    const auto check = [&](const char* what, const auto& got, const auto& expected) {
        if (!(got == expected)) {
            out << "demo: MISMATCH at " << what << "\n";
            ok = false;
        }
    };

    const Field f13 = Field::prime(13);
    const Fourier f12(f13, 12, Fe{2});
    const Code code(f12, 6, 0, 1);

    out << "Fourier matrix F_12 over GF(13), omega = 2:\n";
    for (std::int64_t i = 0; i < 12; ++i) out << join(f12.row(i)) << "\n";
    check("F_12 row 1", f12.row(1), fe_vec({1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7}));

    out << "code: (12, 6, 7), generator rows 0..5, corrects up to t = "
        << code.capability() << " errors\n";

    const std::vector<Fe> w = fe_vec({8, 9, 2, 6, 3, 3, 10, 8, 4, 1, 5, 7});
    out << "received w = " << join(w) << "\n";

    const Syndrome s = syndrome(code, w);
    out << "syndrome = " << join(s) << "\n";
    check("syndrome", s, fe_vec({2, 9, 12, 10, 11, 11}));

    const Matrix h = hankel_matrix(s, code.capability());
    out << "hankel matrix:\n";
    for (std::size_t i = 0; i < h.rows; ++i) {
        for (std::size_t j = 0; j < h.cols; ++j) out << (j ? " " : "") << h.at(i, j).v;
        out << "\n";
    }

    const auto raw = hankel_kernel_raw(f13, s, code.capability());
    if (!raw) {
        out << "demo: MISMATCH at kernel (no kernel vector found)\n";
        return 1;
    }
    out << "kernel = " << join(*raw) << "\n";
    check("kernel", *raw, fe_vec({7, 1, 7, 1}));

    const auto norm = hankel_kernel(f13, s, code.capability());
    out << "kernel (normalized) = " << join(*norm) << "\n";
    check("normalized kernel", *norm, fe_vec({1, 2, 1, 2}));

    const auto a = locator_values(code, *raw);
    out << "a = " << join(a) << "\n";
    check("locator values", a, fe_vec({3, 12, 7, 0, 1, 0, 1, 2, 4, 0, 10, 12}));

    const auto positions = locate(code, *norm);
    out << "error positions = " << join_sizes(positions) << "\n";
    check("error positions", positions, std::vector<std::size_t>({3, 5, 9}));

    const auto solution = magnitudes(code, s, positions);
    if (!solution) {
        out << "demo: MISMATCH at magnitudes (inconsistent system)\n";
        return 1;
    }
    out << "magnitudes = " << join(solution->values) << "\n";
    check("magnitudes", solution->values, fe_vec({10, 1, 4}));

    const DecodeOutcome outcome = decode(code, w);
    out << "error vector = " << join(outcome.error_vector) << "\n";
    check("error vector", outcome.error_vector, fe_vec({0, 0, 0, 10, 0, 1, 0, 0, 0, 4, 0, 0}));
    out << "corrected codeword = " << join(outcome.codeword) << "\n";
    check("corrected codeword", outcome.codeword,
          fe_vec({8, 9, 2, 9, 3, 2, 10, 8, 4, 10, 5, 7}));
    out << "data = " << join(outcome.data) << "\n";
    check("data", outcome.data, fe_vec({1, 2, 3, 4, 5, 6}));
    check("status", outcome.ok(), true);

    // the encoder reproduces the corrected codeword from the data word
    check("re-encoded data", encode(code, outcome.data), outcome.codeword);

    if (ok) out << "demo: all intermediates match expected values\n";
    return ok ? 0 : 1;
}

}  // namespace fmds
