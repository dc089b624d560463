#include <iostream>

#include <CLI11.hpp>

#include "padic/verify.hpp"

using namespace padic;

int main(int argc, char** argv) {
    CLI::App app{"p-adic L-values and polylogarithms"};
    app.require_subcommand(1);

    auto* lp = app.add_subcommand("lp", "L_p(m, omega^{1-m})");
    u64 p = 3;
    int m = 2, prec = 10, level = 3;
    i64 c = 0;
    lp->add_option("--p", p, "odd prime")->required();
    lp->add_option("--m", m, "m >= 2")->required();
    lp->add_option("--c", c, "auxiliary integer (default: smallest with c^{m-1} != 1 mod p)");
    lp->add_option("--precision", prec, "digits");

    auto* li = app.add_subcommand("li", "Li_m^{(p)}(z) for a root of unity z != 1");
    std::string z = "-1";
    int d = 1;
    li->add_option("--p", p, "odd prime")->required();
    li->add_option("--z", z, "root of unity: -1, integer residue, w or w^k")->required();
    li->add_option("--m", m, "m >= 1")->required();
    li->add_option("--level", level, "level of the moment sum")->default_val(3);
    li->add_option("--d", d, "degree of F over Q_p")->default_val(1);
    li->add_option("--precision", prec, "digits");

    CLI11_PARSE(app, argc, argv);
    try {
        if (!is_odd_prime(p)) throw verify::UsageError("p must be an odd prime");
        if (*lp) {
            if (c == 0) c = default_aux_c(p, m);
            std::cout << "L_p(" << m << ", omega^" << (1 - m) << ") = " << lp_value(p, m, c, prec).to_string() << "  (p = " << p
                      << ", c = " << c << ")\n";
            return 0;
        }
        const auto& F = UnramifiedField::get(p, d);
        UnramifiedElement zz = verify::parse_root(F, prec, z);
        if ((zz - zz.one_like()).is_zero()) {
            std::cout << "Li_" << m << "^(p)(1) = L_p(" << m << ", omega^" << (1 - m)
                      << ") = " << lp_value(p, m, default_aux_c(p, m), prec).to_string() << "\n";
            return 0;
        }
        std::cout << "Li_" << m << "^(p)(" << z << ") = " << li_p_star(PolylogPoint::root_of_unity, zz, m, level).to_string()
                  << "  (p = " << p << ", level " << level << ")\n";
        return 0;
    } catch (const verify::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
