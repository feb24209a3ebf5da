// hilb10: exact computations on zero-dimensional ideals and inverse systems,
// plus the built-in verification suite over the expected-value registry.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilb10/apolarity.hpp"
#include "hilb10/artinian.hpp"
#include "hilb10/deformations.hpp"
#include "hilb10/ideal_io.hpp"
#include "hilb10/verify.hpp"

namespace {

using namespace hilb10;

Scalar parseScalarArg(const std::string& text, const Field& field) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Scalar::fromInt(std::stol(text), field);
    return Scalar::fromFraction(std::stol(text.substr(0, slash)),
                                std::stol(text.substr(slash + 1)), field);
}

void printIdeal(const std::vector<Polynomial>& polys) {
    for (const auto& p : polys) std::cout << p.str() << "\n";
}

int cmdGb(const std::string& path) {
    Ideal I = loadIdealFile(path);
    printIdeal(I.groebner().elements);
    return 0;
}

int cmdHilbert(const std::string& path, bool graded) {
    Ideal I = loadIdealFile(path);
    HilbertFunction h = graded ? gradedHilbertFunction(I) : localHilbertFunction(I);
    std::cout << h.str() << "\n";
    return 0;
}

int cmdProfile(const std::string& path) {
    Ideal I = loadIdealFile(path);
    AlgebraProfile p = socleAndProfile(I);
    std::cout << "dim: " << p.dim << "\n"
              << "hilbert: " << p.hilbert.str() << "\n"
              << "emdim: " << p.emdim << "\n"
              << "msdeg: " << p.msdeg << "\n"
              << "socle dimension: " << p.socleDim << "\n"
              << "gorenstein: " << (p.gorenstein ? "yes" : "no") << "\n";
    for (const auto& s : p.socleBasis) std::cout << "socle: " << s.str() << "\n";
    return 0;
}

int cmdApolar(const std::string& formText, std::size_t nvars, long primeChar) {
    Field field = primeChar > 0 ? Field::primeField(static_cast<unsigned>(primeChar))
                                : Field::rationals();
    RingPtr R = RingContext::make("y", nvars, field);
    InverseForm g = InverseForm::parse(formText, R);
    Ideal perp = apolarIdeal(g);
    printIdeal(perp.generators());
    MinimalGeneratorProfile mg = minimalGeneratorCounts(perp, g.degree + 1);
    std::cout << "generators: " << perp.generators().size() << "\n"
              << "beta: " << mg.beta << "\n";
    return 0;
}

int cmdTangent(const std::string& path, long ambientN) {
    Ideal I = loadIdealFile(path);
    TangentReport r = tangentDimension(I, ambientN);
    std::cout << "dim S/I: " << r.dimA << "\n"
              << "dim S/I^2: " << r.dimA2 << "\n"
              << "h0: " << r.h0 << "\n"
              << "ambient N: " << r.ambientN << "\n"
              << "obstructed: " << (r.obstructed ? "yes" : "no") << "\n";
    return 0;
}

int cmdFiber(const std::string& path, const std::string& bText) {
    Ideal family = loadIdealFile(path);
    Scalar b = parseScalarArg(bText, family.ring()->field());
    printIdeal(fiber(family, b).generators());
    return 0;
}

int cmdIntersect(const std::string& pathA, const std::string& pathB) {
    Ideal A = loadIdealFile(pathA);
    Ideal B = loadIdealFile(pathB);
    Ideal Bmapped(A.ring());
    for (const auto& g : B.generators()) Bmapped.addGenerator(mapToRing(g, A.ring()));
    Ideal meetAB = intersect(A, Bmapped);
    printIdeal(meetAB.groebner().elements);
    return 0;
}

int cmdVerify(const std::string& entry, bool json) {
    VerificationReport report = runVerification(entry);
    if (json)
        std::cout << reportToJson(report).dump(2) << "\n";
    else
        std::cout << reportToText(report);
    return report.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on zero-dimensional ideals and inverse systems"};
    app.require_subcommand(1);

    std::string file, fileB, formText, bText, entry;
    bool graded = false, local = false, json = false;
    std::size_t nvars = 0;
    long ambientN = -1, primeChar = 0;

    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
    gb->add_option("file", file, "ideal file")->required();

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of S/I");
    hilbert->add_option("file", file, "ideal file")->required();
    hilbert->add_flag("--local", local, "m-adic (local) Hilbert function (default)");
    hilbert->add_flag("--graded", graded, "graded Hilbert function (homogeneous I)");

    auto* profile = app.add_subcommand("profile", "Socle/Gorenstein profile of S/I");
    profile->add_option("file", file, "ideal file")->required();

    auto* apolar = app.add_subcommand("apolar", "Apolar ideal of a homogeneous form");
    apolar->add_option("form", formText, "form in variables y1..yN")->required();
    apolar->add_option("--vars", nvars, "number of variables")->required();
    apolar->add_option("--fp", primeChar, "work over F_p instead of Q");

    auto* tangent = app.add_subcommand("tangent", "Tangent-space dimension h0");
    tangent->add_option("file", file, "ideal file")->required();
    tangent->add_option("--ambient", ambientN, "ambient dimension N (default: #vars)");

    auto* fiberCmd = app.add_subcommand("fiber", "Specialize the family parameter b");
    fiberCmd->add_option("file", file, "family ideal file with a variable named b")->required();
    fiberCmd->add_option("--b", bText, "parameter value (integer or p/q)")->required();

    auto* intersectCmd = app.add_subcommand("intersect", "Intersection of two ideals");
    intersectCmd->add_option("fileA", file, "first ideal file")->required();
    intersectCmd->add_option("fileB", fileB, "second ideal file")->required();

    auto* verifyCmd =
        app.add_subcommand("verify", "Run the built-in expected-value verification suite");
    verifyCmd->add_option("--entry", entry,
                          "run only entries whose id equals or starts with this string");
    verifyCmd->add_flag("--json", json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gb) return cmdGb(file);
        if (*hilbert) {
            if (graded && local) {
                std::cerr << "error: --local and --graded are mutually exclusive\n";
                return 2;
            }
            return cmdHilbert(file, graded);
        }
        if (*profile) return cmdProfile(file);
        if (*apolar) return cmdApolar(formText, nvars, primeChar);
        if (*tangent) return cmdTangent(file, ambientN);
        if (*fiberCmd) return cmdFiber(file, bText);
        if (*intersectCmd) return cmdIntersect(file, fileB);
        if (*verifyCmd) return cmdVerify(entry, json);
    } catch (const hilb10::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hilb10::InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
