#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "frieze/frieze.hpp"

namespace frieze::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

StripIsometry parse_literal(const std::string& text) {
    try {
        return StripIsometry::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

Scalar parse_scalar(const std::string& text, const char* what) {
    try {
        return Scalar::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

TypeTag parse_tag_arg(const std::string& text) {
    try {
        return parse_tag(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact frieze-group toolkit: compose strip isometries, classify, synthesize, detect",
                 "frieze"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    // compose
    std::string lhs, rhs;
    auto* compose_cmd = app.add_subcommand("compose", "Compose two strip isometries (B acts first)");
    compose_cmd->add_option("A", lhs, "left factor, e.g. R(3)")->required();
    compose_cmd->add_option("B", rhs, "right factor, e.g. V(1)")->required();

    // classify-gens
    std::vector<std::string> gens;
    auto* gens_cmd = app.add_subcommand("classify-gens", "Classify the group generated by isometries");
    gens_cmd->add_option("generators", gens, "isometry literals")->required();

    // generate
    std::string motif_path, gen_tag, gen_period, gen_anchor = "0", svg_path, pgm_path;
    int copies = 2, px = 32, supersample = 1;
    auto* gen_cmd = app.add_subcommand("generate", "Stamp a motif with a standard frieze group");
    gen_cmd->add_option("--motif", motif_path, "motif file (default: bundled asymmetric flag)");
    gen_cmd->add_option("--tag", gen_tag, "frieze type, e.g. p2mg or <T,R,V,S'>")->required();
    gen_cmd->add_option("--period", gen_period, "period (default: motif cell width)");
    gen_cmd->add_option("--anchor", gen_anchor, "anchor of rotation centers / mirrors")->capture_default_str();
    gen_cmd->add_option("--copies", copies, "number of periods")->check(CLI::PositiveNumber)->capture_default_str();
    gen_cmd->add_option("--svg", svg_path, "write SVG here");
    gen_cmd->add_option("--pgm", pgm_path, "write binary PGM here");
    gen_cmd->add_option("--px", px, "pixels per unit length")->check(CLI::PositiveNumber)->capture_default_str();
    gen_cmd->add_option("--supersample", supersample, "samples per pixel side")
        ->check(CLI::IsMember({1, 2, 4}))->capture_default_str();

    // detect
    std::string detect_path;
    double eta = 0.02;
    int delta = 10;
    bool require_repeat = false;
    auto* detect_cmd = app.add_subcommand("detect", "Classify a periodic strip image (P5 PGM)");
    detect_cmd->add_option("image", detect_path, "input PGM")->required();
    detect_cmd->add_option("--eta", eta, "allowed mismatching pixel fraction")
        ->check(CLI::Range(0.0, 1.0))->capture_default_str();
    detect_cmd->add_option("--delta", delta, "gray-level tolerance")->check(CLI::Range(0, 255))->capture_default_str();
    detect_cmd->add_flag("--require-repeat", require_repeat, "fail unless the image holds >= 2 periods");

    // transform
    std::string tr_in, tr_op, tr_k, tr_out;
    auto* tr_cmd = app.add_subcommand("transform", "Scale or shear an image (nearest neighbor)");
    tr_cmd->add_option("image", tr_in, "input PGM")->required();
    tr_cmd->add_option("--op", tr_op, "scale_uniform | scale_x | scale_y | shear_x")->required();
    tr_cmd->add_option("--k", tr_k, "rational factor, e.g. 2 or 1/2")->required();
    tr_cmd->add_option("-o,--output", tr_out, "output PGM")->required();

    // wrap
    std::string wrap_tag, texture_path, ring_path;
    int wrap_n = 6;
    auto* wrap_cmd = app.add_subcommand("wrap", "Cylinder symmetries of a frieze wrapped n periods around");
    wrap_cmd->add_option("--tag", wrap_tag, "frieze type")->required();
    wrap_cmd->add_option("--n", wrap_n, "periods around the cylinder")->check(CLI::PositiveNumber)->capture_default_str();
    wrap_cmd->add_option("--texture", texture_path, "one-period PGM to replicate");
    wrap_cmd->add_option("-o,--output", ring_path, "output PGM for the wrapped texture");

    // verify-table / print-table
    std::uint64_t seed = default_table_seed;
    std::size_t samples = 1000;
    auto* verify_cmd = app.add_subcommand("verify-table", "Check the multiplication table against the affine oracle");
    verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--samples", samples, "random cases per cell")->capture_default_str();
    auto* print_cmd = app.add_subcommand("print-table", "Print the full and compact multiplication tables");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (compose_cmd->parsed()) {
            out << compose(parse_literal(lhs), parse_literal(rhs)) << "\n";
        } else if (gens_cmd->parsed()) {
            std::vector<StripIsometry> isos;
            for (const auto& g : gens) isos.push_back(parse_literal(g));
            FriezeGroup g = from_generators(isos);
            out << g.str() << " gens=" << generator_name(g.tag) << "\n";
        } else if (gen_cmd->parsed()) {
            Motif m = motif_path.empty() ? bundled_flag_motif() : read_motif_file(motif_path);
            Scalar period = gen_period.empty() ? m.cell_width : parse_scalar(gen_period, "--period");
            if (period <= Scalar(0)) throw UsageError("--period must be positive");
            FriezeGroup g = standard_group(parse_tag_arg(gen_tag), period, parse_scalar(gen_anchor, "--anchor"));
            Scene s = generate(m, g, copies);
            if (!svg_path.empty()) write_text(svg_path, render_svg(s));
            if (!pgm_path.empty()) write_pgm_file(rasterize(s, px, supersample), pgm_path);
            if (svg_path.empty() && pgm_path.empty()) {
                out << render_svg(s);
            } else {
                out << g.str() << " copies=" << copies << " placed=" << s.placed.size() << "\n";
            }
        } else if (detect_cmd->parsed()) {
            Image img = read_pgm_file(detect_path);
            out << classify_image(img, {eta, delta}, require_repeat).str() << "\n";
        } else if (tr_cmd->parsed()) {
            TransformOp op;
            try {
                op = parse_transform_op(tr_op);
            } catch (const ParseError& e) {
                throw UsageError(e.what());
            }
            Scalar k = parse_scalar(tr_k, "--k");
            if (k <= Scalar(0) && op != TransformOp::ShearX) throw UsageError("--k must be positive for scaling");
            Image res = transform_image(read_pgm_file(tr_in), op, k);
            write_pgm_file(res, tr_out);
            out << "wrote " << tr_out << " " << res.width << "x" << res.height << "\n";
        } else if (wrap_cmd->parsed()) {
            out << wrap_report(parse_tag_arg(wrap_tag), wrap_n).str() << "\n";
            if (!texture_path.empty()) {
                if (ring_path.empty()) throw UsageError("--texture needs -o");
                Image ring = wrap_texture(read_pgm_file(texture_path), wrap_n);
                write_pgm_file(ring, ring_path);
                out << "wrote " << ring_path << " " << ring.width << "x" << ring.height << "\n";
            }
        } else if (verify_cmd->parsed()) {
            TableCheck check = verify_table(seed, samples);
            out << check.str();
            return check.ok() ? exit_ok : exit_domain;
        } else if (print_cmd->parsed()) {
            out << print_table();
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_ok;
}

}  // namespace frieze::cli
