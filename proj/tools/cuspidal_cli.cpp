#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cuspidal/arith.hpp"
#include "cuspidal/cusp.hpp"
#include "cuspidal/delta.hpp"
#include "cuspidal/etaq.hpp"
#include "cuspidal/generators.hpp"
#include "cuspidal/kernel.hpp"
#include "cuspidal/oracle.hpp"
#include "cuspidal/record.hpp"

namespace {

using namespace cuspidal;

/// Divisor coefficients: `d:a` pairs, shortcuts `z:d` (the divisor Z(d)) and
/// `c:d` (phi(M_d) P_1 - P_d), the bare token `0` for the zero divisor, or a
/// single colon-joined list of exactly sigma_0(N) integers read positionally.
DivisorVector parse_divisor(long N, const std::vector<std::string>& toks) {
    const OrderedLevel level = ascending_level(N);
    DivisorVector acc = zero_vector(N);
    const std::size_t nd = divisors_of(N).size();

    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        return parts;
    };

    if (toks.size() == 1 && toks[0] == "0") return acc;
    if (toks.size() == 1) {
        const auto parts = split(toks[0]);
        if (parts.size() == nd && parts[0].find_first_of("zc") == std::string::npos) {
            for (std::size_t i = 0; i < nd; ++i)
                acc.a[i] = Int(parts[i]);
            return acc;
        }
    }
    for (const std::string& tok : toks) {
        const auto parts = split(tok);
        if (parts.size() != 2)
            throw std::runtime_error("bad coefficient token: " + tok);
        if (parts[0] == "z") {
            acc = add(acc, z_vector(level, std::stol(parts[1])).vec);
        } else if (parts[0] == "c") {
            acc = add(acc, C_divisor(N, std::stol(parts[1])));
        } else {
            const long d = std::stol(parts[0]);
            if (d < 1 || N % d != 0)
                throw std::runtime_error("not a divisor of N: " + parts[0]);
            DivisorVector e = basis_vector(N, d);
            acc = add(acc, scale(Int(parts[1]), e));
        }
    }
    return acc;
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int run_structure(long N, long l, const std::string& format,
                  bool check, bool strict, const std::string& out_path) {
    if (N % 2 == 0) throw std::runtime_error("N must be odd");
    const TorsionStructure ts = torsion_structure(N, l, !strict);
    if (ts.relaxed_ordering && format == "human")
        std::cerr << "note: ordering assumption unsatisfiable; "
                     "gamma-first ordering used\n";
    if (check) {
        const VerifyReport rep = verify(N, l, !strict);
        if (!rep.equal)
            throw std::runtime_error(
                "oracle disagrees with the structure formula at N=" +
                std::to_string(N) + ", l=" + std::to_string(l));
    }
    const OutputRecord rec = make_record(ts, check);
    std::string text;
    if (format == "json")
        text = to_json(rec) + "\n";
    else if (format == "csv") {
        text = csv_header() + "\n";
        for (const auto& row : to_csv_rows(rec)) text += row + "\n";
    } else {
        text = to_human(rec);
    }
    write_out(text, out_path);
    return 0;
}

int run_order(long N, const std::vector<std::string>& coeffs) {
    const DivisorVector D = parse_divisor(N, coeffs);
    if (!degree_check(D))
        throw std::runtime_error("divisor is not degree zero (sum a_d phi(M_d) != 0)");
    const OrderData od = order_of_divisor(D);
    if (od.degenerate) {
        std::cout << "zero divisor: order 1\n";
        return 0;
    }
    const std::vector<long> divs = divisors_of(N);
    std::cout << "V(D):";
    for (const Int& v : od.V) std::cout << " " << v;
    std::cout << "\nGCD(D): " << od.gcd << "\nV(D)/GCD:";
    for (const Int& v : od.Vnorm) std::cout << " " << v;
    std::cout << "\n";
    for (const auto& [p, pw] : od.Pw)
        std::cout << "Pw_" << p << ": " << pw
                  << (pw % 2 == 0 ? " (even)" : " (odd)") << "\n";
    std::cout << "h: " << od.h << "\norder: " << od.order << "\n";
    return 0;
}

int run_eta_div(long N, const std::vector<std::string>& coeffs) {
    const DivisorVector D = parse_divisor(N, coeffs);
    if (!degree_check(D))
        throw std::runtime_error("divisor is not degree zero");
    const EtaExponentVector r = eta_of_divisor(D);
    const std::vector<long> divs = divisors_of(N);
    std::cout << "eta exponents r(D):\n";
    for (std::size_t i = 0; i < divs.size(); ++i)
        std::cout << "  eta(" << divs[i] << "z)^(" << r.r[i] << ")\n";
    const OrderData od = order_of_divisor(D);
    if (!od.degenerate) {
        EtaExponentVector nr = scale(Rat(od.order), r);
        std::cout << "order n = " << od.order
                  << "; n*r is modular: " << (is_modular(nr) ? "yes" : "no")
                  << "\n";
    }
    return 0;
}

int run_cusps(long N) {
    long total = 0;
    std::cout << "d  gcd(d,N/d)  cusps\n";
    for (const CuspLevel& c : cusp_table(N)) {
        std::cout << c.d << "  " << c.Md << "  " << c.count << "\n";
        total += c.count;
    }
    std::cout << "total cusps: " << total << "\n";
    return 0;
}

int run_verify(long N, long l, bool strict) {
    const VerifyReport rep = verify(N, l, !strict);
    auto show = [](const std::vector<Int>& orders) {
        if (orders.empty()) return std::string("trivial");
        std::string s;
        for (std::size_t i = 0; i < orders.size(); ++i)
            s += (i ? " + " : "") + std::string("Z/") + to_string(orders[i]);
        return s;
    };
    std::cout << "N=" << rep.N << " l=" << rep.l << "\n"
              << "formula: " << show(rep.formula) << "\n"
              << "oracle:  " << show(rep.oracle) << "\n"
              << (rep.equal ? "EQUAL" : "DIFFERENT") << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    return rep.equal ? 0 : 1;
}

int run_table(const std::string& range, long l, const std::string& format,
              bool check, const std::string& out_path) {
    const auto dots = range.find("..");
    if (dots == std::string::npos)
        throw std::runtime_error("range must be of the form A..B");
    long lo = std::stol(range.substr(0, dots));
    long hi = std::stol(range.substr(dots + 2));
    if (lo % 2 == 0) ++lo;

    std::ostringstream out;
    const bool json = format == "json";
    if (json)
        out << "[";
    else
        out << csv_header() << "\n";
    bool first = true;
    for (long N = lo; N <= hi; N += 2) {
        if (N < 3) continue;
        std::string reason;
        if ((3 * N) % (l * l) == 0) reason = "l^2 divides 3N";
        OutputRecord rec;
        if (reason.empty()) {
            try {
                const TorsionStructure ts = torsion_structure(N, l, true);
                bool checked = false;
                if (check) {
                    checked = verify(N, l, true).equal;
                    if (!checked) reason = "oracle mismatch";
                }
                rec = make_record(ts, checked);
            } catch (const std::exception& e) {
                reason = e.what();
            }
        }
        if (!reason.empty() && rec.N == 0) {
            if (json) {
                out << (first ? "" : ",") << "{\"N\":" << N << ",\"l\":" << l
                    << ",\"skipped\":\"" << reason << "\"}";
                first = false;
            } else {
                out << skipped_csv_row(N, l, reason) << "\n";
            }
            continue;
        }
        if (json) {
            out << (first ? "" : ",") << to_json(rec);
            first = false;
        } else {
            for (const auto& row : to_csv_rows(rec, reason)) out << row << "\n";
        }
    }
    if (json) out << "]\n";
    write_out(out.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational cuspidal divisor class groups of X_0(N) and the "
                 "l-primary torsion of the generalized Jacobian"};
    app.require_subcommand(1);

    long N = 0, l = 3;
    std::string format = "human", out_path, range;
    bool check = false, strict = false;
    std::vector<std::string> coeffs;

    auto* s_structure =
        app.add_subcommand("structure", "l-primary torsion structure for N");
    s_structure->add_option("N", N, "odd level")->required();
    s_structure->add_option("--l", l, "odd prime l with l^2 not dividing 3N")
        ->required();
    s_structure->add_option("--format", format, "human|json|csv");
    s_structure->add_flag("--verify", check, "cross-check with the SNF oracle");
    s_structure->add_flag("--strict-ordering", strict,
                          "error out when the ordering assumption fails");
    s_structure->add_option("--out", out_path, "output file");

    auto* s_order = app.add_subcommand(
        "order", "order of a degree-zero rational cuspidal divisor");
    s_order->add_option("N", N, "level")->required();
    s_order->add_option("coeffs", coeffs, "divisor coefficients")->required();

    auto* s_eta = app.add_subcommand(
        "eta-div", "eta exponents of a degree-zero rational cuspidal divisor");
    s_eta->add_option("N", N, "level")->required();
    s_eta->add_option("coeffs", coeffs, "divisor coefficients")->required();

    auto* s_cusps = app.add_subcommand("cusps", "cusp levels and counts");
    s_cusps->add_option("N", N, "level")->required();

    auto* s_verify =
        app.add_subcommand("verify", "formula vs SNF-oracle comparison");
    s_verify->add_option("N", N, "odd level")->required();
    s_verify->add_option("--l", l, "odd prime")->required();
    s_verify->add_flag("--strict-ordering", strict,
                       "error out when the ordering assumption fails");

    auto* s_table = app.add_subcommand("table", "batch table over a range of N");
    s_table->add_option("range,--range", range, "odd range A..B");
    s_table->add_option("--l", l, "odd prime")->required();
    s_table->add_option("--format", format, "csv|json (default csv)");
    s_table->add_flag("--verify", check, "cross-check each row");
    s_table->add_option("--out", out_path, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (s_structure->parsed())
            return run_structure(N, l, format, check, strict, out_path);
        if (s_order->parsed()) return run_order(N, coeffs);
        if (s_eta->parsed()) return run_eta_div(N, coeffs);
        if (s_cusps->parsed()) return run_cusps(N);
        if (s_verify->parsed()) return run_verify(N, l, strict);
        if (s_table->parsed()) {
            if (range.empty())
                throw std::runtime_error("table: missing range (A..B)");
            return run_table(range, l, format == "human" ? "csv" : format,
                             check, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
