#include "CLI11.hpp"
#include "kricker/moves.hpp"

#include <iostream>
#include <sstream>

using namespace kricker;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kParse = 3, kDegenerate = 4, kUnresolved = 5 };

struct Config {
    std::string input;
    int degree = 2;
    ReducerBudget budget;
    long leaves = 200000;
    std::string format = "text";
    bool aug = false;
    bool kricker = false;
    std::string move;
    long order = 1;
};

std::string matrix_text(const PolyMatrix& W) {
    std::ostringstream os;
    for (int i = 0; i < W.rows(); ++i) {
        os << "  [";
        for (int j = 0; j < W.cols(); ++j) os << (j ? " | " : " ") << W(i, j).str();
        os << " ]\n";
    }
    return os.str();
}

std::string fraction_text(const RationalFraction& f) {
    if (f.is_polynomial()) return f.num().str();
    return "(" + f.num().str() + ") / (" + f.den().str() + ")";
}

void print_series(const Series& s, const Config& cfg, const std::string& title) {
    if (cfg.format == "diagram") {
        std::cout << s.str();
        return;
    }
    std::cout << title << " (" << s.size() << " terms, truncation " << s.truncation() << ")\n" << s.str();
}

int run_winding(const Config& cfg) {
    TangleProgram p = load_program(cfg.input);
    ComponentMap c = trace_components(p);
    WindingMatrix w = winding_matrix(c);
    std::cout << "components " << c.size() << "\n" << "W\n" << matrix_text(w.W);
    Signatures s = linking_and_signatures(w.W);
    std::cout << "signature + " << s.sigma_plus << " - " << s.sigma_minus << " nullity " << s.nullity << "\n";
    return kOk;
}

int run_blanchfield(const Config& cfg) {
    PolyMatrix W = winding_matrix(load_program(cfg.input)).W;
    AlexanderData a = alexander_and_h1(W);
    std::cout << "W\n" << matrix_text(W);
    std::cout << "alexander " << a.alexander.str() << "\n" << "h1 order " << a.h1_order << "\n";
    auto space = colored_space(W);
    const BlanchfieldPresentation& bp = space->presentation();
    std::cout << "delta " << bp.delta().str() << "\n" << "basis size " << bp.basis_size() << "\n";
    std::cout << "hermite\n" << matrix_text(bp.hermite()) << "pairing -W^-1\n";
    for (int i = 0; i < bp.rank(); ++i) {
        std::cout << "  [";
        for (int j = 0; j < bp.rank(); ++j) std::cout << (j ? " | " : " ") << fraction_text(bp.B()(i, j));
        std::cout << " ]\n";
    }
    return kOk;
}

int run_zcircle(const Config& cfg) {
    print_series(z_circle(load_program(cfg.input), cfg.degree), cfg, "zcircle");
    return kOk;
}

int run_ztilde(const Config& cfg) {
    TangleProgram p = load_program(cfg.input);
    ColoredValue v = cfg.aug ? z_tilde_aug(p, cfg.degree) : z_tilde(p, cfg.degree);
    if (cfg.format == "text") {
        std::cout << "W\n" << matrix_text(v.space->presentation().W());
        std::cout << "delta " << v.space->presentation().delta().str() << "\n";
    }
    if (cfg.kricker)
        print_series(psi(v), cfg, "kricker (edge labels over delta)");
    else
        print_series(v.series, cfg, cfg.aug ? "ztilde augmented" : "ztilde");
    return kOk;
}

int run_rho(const Config& cfg) {
    if (cfg.order < 1) throw CLI::ValidationError("order", "must be positive");
    for (long p = 2; p <= cfg.order; ++p)
        if (is_prime(p) && cfg.order % p == 0) std::cout << "rho_" << p << " " << rho_p(cfg.order, p) << "\n";
    print_series(augmentation(cfg.order, cfg.degree), cfg, "augmentation");
    return kOk;
}

int run_check_moves(const Config& cfg) {
    Move m = parse_move(cfg.move);
    auto cases = check_moves(m, load_corpus(cfg.input), cfg.degree, cfg.budget);
    int equal = 0, unresolved = 0, skipped = 0;
    for (const auto& c : cases) {
        std::cout << cfg.move << " " << c.label << ": " << c.result;
        if (cfg.format == "text") std::cout << " (" << c.seconds << " s)";
        std::cout << "\n";
        if (c.result == "equal")
            ++equal;
        else if (c.result == "unresolved")
            ++unresolved;
        else
            ++skipped;
    }
    std::cout << "summary: " << equal << " equal, " << unresolved << " unresolved, " << skipped << " skipped\n";
    return unresolved ? kUnresolved : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Refined Kricker invariant of presented knots in homology spheres"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--degree", cfg.degree, "Truncation degree N")->check(CLI::NonNegativeNumber);
    app.add_option("--budget-diagrams", cfg.budget.diagrams, "Diagrams explored when comparing values")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-window", cfg.budget.window, "Label slack around compared diagrams")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget-leaves", cfg.leaves, "Search leaves per canonical labeling")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "diagram"}));

    auto file_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", cfg.input, "Presentation program")->required();
        return sub;
    };
    auto* winding = file_cmd("winding", "Winding matrix and signature");
    auto* blanch = file_cmd("blanchfield", "Alexander module and pairing");
    auto* zcircle = file_cmd("zcircle", "Lifted beaded series");
    auto* ztilde = file_cmd("ztilde", "Coloured invariant");
    ztilde->add_flag("--aug", cfg.aug, "Include the augmented isolated vertices");
    ztilde->add_flag("--kricker", cfg.kricker, "Pair all legs");
    auto* kricker = file_cmd("kricker", "Pairing of the coloured invariant");
    auto* rho = app.add_subcommand("rho", "rho_p values and augmentation for |H_1|");
    rho->add_option("order", cfg.order, "Order of the first homology")->required();
    auto* moves = app.add_subcommand("check-moves", "Invariance checks over a corpus directory");
    moves->add_option("move", cfg.move, "Move")
        ->required()
        ->check(CLI::IsMember({"reidemeister", "basepoint", "kirby1", "kirby2", "orientation"}));
    moves->add_option("dir", cfg.input, "Corpus directory")->required()->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    set_default_leaf_budget(cfg.leaves);

    try {
        if (winding->parsed()) return run_winding(cfg);
        if (blanch->parsed()) return run_blanchfield(cfg);
        if (zcircle->parsed()) return run_zcircle(cfg);
        if (ztilde->parsed()) return run_ztilde(cfg);
        if (kricker->parsed()) {
            cfg.kricker = true;
            return run_ztilde(cfg);
        }
        if (rho->parsed()) return run_rho(cfg);
        if (moves->parsed()) return run_check_moves(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const DegenerateGaussian& e) {
        std::cerr << e.what() << "\n";
        return kDegenerate;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kUnresolved;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
