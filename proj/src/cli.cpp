#include "latcov/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "latcov/covariogram.hpp"
#include "latcov/homometry.hpp"
#include "latcov/invariants.hpp"
#include "latcov/io.hpp"
#include "latcov/reconstruct.hpp"
#include "latcov/search.hpp"

namespace latcov {

namespace {

enum class Format { text, records };

/// "x,y;x,y;..." for records output.
std::string compact(const LatticeSet& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ';';
    const auto& p = k[i];
    for (std::size_t j = 0; j < p.dim(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
  }
  return s;
}

std::string compact(const LatticeVector& v) {
  std::string s;
  for (std::size_t j = 0; j < v.dim(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s;
}

std::string compact(const std::vector<LatticeVector>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ";" : "") + compact(vs[i]);
  return s;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::pair<int, int> parse_box(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw Error("");
    std::size_t used = 0;
    const int w = std::stoi(text.substr(0, x), &used);
    if (used != x) throw Error("");
    const std::string rest = text.substr(x + 1);
    const int h = std::stoi(rest, &used);
    if (used != rest.size() || w < 1 || h < 1) throw Error("");
    return {w, h};
  } catch (const std::exception&) {
    throw Error("invalid box '" + text + "', expected WxH with positive integers");
  }
}

HexagonParams parse_hex(const std::string& text) {
  const LatticeVector v = parse_vector_arg(text, 6);
  HexagonParams h{v[0], v[1], v[2], v[3], v[4], v[5]};
  h.validate();
  return h;
}

Covariogram load_input_covariogram(const std::string& path, bool from_cov) {
  return from_cov ? load_covariogram(path) : compute_covariogram(load_points(path));
}

void write_file(const std::string& path, const LatticeSet& k) {
  std::ofstream f(path);
  if (!f) throw Error(path + ":0: cannot write file");
  write_points(f, k);
}

void print_invariants(std::ostream& out, const InvariantRecord& r, Format fmt) {
  if (fmt == Format::records) {
    out << "record=invariants normals=" << compact(r.normals) << " m_prime=" << to_string(r.m_prime)
        << " m_doubleprime=" << to_string(r.m_doubleprime) << " m=" << to_string(r.m)
        << " delta=" << to_string(r.delta) << " det_set=" << join(r.det_set)
        << " certified=" << yes_no(r.certified) << '\n';
    return;
  }
  out << "normals:";
  for (const auto& u : r.normals) out << ' ' << to_string(u);
  out << "\nm_prime: " << to_string(r.m_prime) << "\nm_doubleprime: " << to_string(r.m_doubleprime)
      << "\nm: " << to_string(r.m) << "\ndelta: " << to_string(r.delta)
      << "\ndet_set: " << join(r.det_set) << "\ncertified: " << yes_no(r.certified) << '\n';
}

void print_pair(std::ostream& out, const MirrorPairReport& r, Format fmt, const std::string& extra) {
  if (fmt == Format::records) {
    out << "record=pair" << extra << " dim=" << r.k.dim() << " size=" << r.k.size()
        << " homometric=" << yes_no(r.homometric) << " nontrivial=" << yes_no(r.nontrivial)
        << " S=" << compact(r.s) << " T=" << compact(r.t) << " K=" << compact(r.k)
        << " L=" << compact(r.l) << '\n';
    return;
  }
  out << "# K\n" << format_points(r.k) << "# L\n" << format_points(r.l);
  out << "homometric=" << yes_no(r.homometric) << " nontrivial=" << yes_no(r.nontrivial) << '\n';
}

void print_search(std::ostream& out, std::ostream& err, const SearchReport& rep, Format fmt) {
  const bool records = fmt == Format::records;
  if (records) {
    out << "record=summary box=" << rep.width << 'x' << rep.height << " sets=" << rep.total_sets
        << " classes=" << rep.classes.size() << " pairs=" << rep.pair_count();
  } else {
    out << "box=" << rep.width << 'x' << rep.height << " sets=" << rep.total_sets
        << " classes=" << rep.classes.size() << " pairs=" << rep.pair_count();
  }
  if (rep.matched_corollary) out << " matched=" << rep.matched_count();
  out << '\n';

  for (std::size_t c = 0; c < rep.classes.size(); ++c) {
    const auto& cls = rep.classes[c];
    const std::size_t idx = c + 1;
    if (records) {
      out << "record=class index=" << idx << " size=" << cls.members.front().size()
          << " members=" << cls.members.size() << '\n';
    } else {
      out << "class " << idx << " size=" << cls.members.front().size()
          << " members=" << cls.members.size() << '\n';
    }
    for (std::size_t m = 0; m < cls.members.size(); ++m) {
      if (records) {
        out << "record=member class=" << idx << " index=" << m + 1
            << " points=" << compact(cls.members[m]) << '\n';
      } else {
        out << "  member " << m + 1 << ": " << to_string(cls.members[m]) << '\n';
      }
    }
    for (const auto& p : cls.pairs) {
      out << (records ? "record=pair class=" + std::to_string(idx) + " first="
                      : "  pair ")
          << p.first + 1 << (records ? " second=" : "-") << p.second + 1
          << (records ? " verified=" : ": verified=") << yes_no(p.verified);
      if (rep.matched_corollary) {
        if (p.match) {
          const auto& m = *p.match;
          out << " matched=true k=" << m.params.k() << " l=" << m.params.ell()
              << " hex=" << to_string(m.hex) << " swapped=" << yes_no(m.swapped)
              << " map_k=" << to_string(m.map_k) << " map_l=" << to_string(m.map_l);
        } else {
          out << " matched=false";
          err << "warning: pair " << p.first + 1 << '-' << p.second + 1 << " of class " << idx
              << " matches no hexagon-family instance\n";
        }
      }
      out << '\n';
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for discrete covariograms of lattice-convex sets", "latcov"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output style")
      ->check(CLI::IsMember({"text", "records"}))
      ->default_val("text");

  std::string file, file2, normal_arg, box_arg, hex_arg, point_arg, out_prefix;
  bool from_cov = false, match = false, allow_large = false, fail_unmatched = false;
  std::int64_t k_param = 1, l_param = 0;
  unsigned jobs = 1;

  auto* compute = app.add_subcommand("compute-cov", "Covariogram of a points file");
  compute->add_option("points", file)->required();

  auto* diffset = app.add_subcommand("diffset", "Difference set (support of the covariogram)");
  diffset->add_option("file", file)->required();
  diffset->add_flag("--from-cov", from_cov, "Input is a covariogram file");

  auto* inv = app.add_subcommand("invariants", "Edge normals, m', m'', m, delta, certificate");
  inv->add_option("file", file)->required();
  inv->add_flag("--from-cov", from_cov, "Compute from a covariogram file alone");

  auto* edges = app.add_subcommand("edges", "Edge pair in a direction, read from the covariogram");
  edges->add_option("file", file)->required();
  edges->add_option("--normal", normal_arg, "Primitive direction ux,uy")->required();
  edges->add_flag("--from-cov", from_cov, "Input is a covariogram file");

  auto* recon = app.add_subcommand("reconstruct", "All lattice-convex sets with this covariogram");
  recon->add_option("covariogram", file)->required();
  recon->add_option("--box", box_arg, "Search box WxH (default: half the support extent)");
  recon->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* convex = app.add_subcommand("check-convex", "Exit 0 iff the set is lattice-convex");
  convex->add_option("points", file)->required();

  auto* canon = app.add_subcommand("canonical", "Representative under translation and reflection");
  canon->add_option("points", file)->required();

  auto* affine = app.add_subcommand("affine-equiv", "Find x -> Ax+t, A unimodular, mapping A onto B");
  affine->add_option("a", file)->required();
  affine->add_option("b", file2)->required();

  auto* gen = app.add_subcommand("gen-pair", "Hexagon-family homometric pair");
  gen->add_option("--k", k_param)->required();
  gen->add_option("--l", l_param)->required();
  gen->add_option("--hex", hex_arg, "a1,a2,b1,b2,g1,g2")->required();
  gen->add_option("--out", out_prefix, "Write <prefix>.K.pts and <prefix>.L.pts");

  auto* thm = app.add_subcommand("verify-thm22", "Compare conditions (i) and (ii) for a set S");
  thm->add_option("--k", k_param)->required();
  thm->add_option("--l", l_param)->required();
  thm->add_option("points", file)->required();

  auto* prod = app.add_subcommand("product-pair", "K x L versus K x (-L)");
  prod->add_option("k", file)->required();
  prod->add_option("l", file2)->required();
  prod->add_option("--out", out_prefix, "Write <prefix>.K.pts and <prefix>.L.pts");

  auto* search = app.add_subcommand("search", "Homometric classes among lattice-convex sets of a box");
  search->add_option("--box", box_arg, "Box WxH")->required();
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--match-corollary", match, "Match each pair against the hexagon family");
  search->add_flag("--allow-large", allow_large, "Permit boxes above the soft size limit");
  search->add_flag("--fail-on-unmatched", fail_unmatched, "Exit 1 if a pair is unmatched");

  auto* decomp = app.add_subcommand("decompose", "Split a point as sublattice vector plus tile point");
  decomp->add_option("--k", k_param)->required();
  decomp->add_option("--l", l_param)->required();
  decomp->add_option("--point", point_arg, "x,y")->required();

  std::vector<const char*> argv{"latcov"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const Format fmt = format == "records" ? Format::records : Format::text;

  try {
    if (compute->parsed()) {
      const Covariogram g = compute_covariogram(load_points(file));
      if (fmt == Format::records) {
        for (const auto& e : g.entries()) {
          out << "record=entry u=" << compact(e.offset) << " count=" << e.count << '\n';
        }
        out << "record=summary dim=" << g.dim() << " entries=" << g.size()
            << " mass=" << static_cast<std::int64_t>(g.mass()) << '\n';
      } else {
        write_covariogram(out, g);
      }
      return kExitOk;
    }
    if (diffset->parsed()) {
      const LatticeSet d =
          from_cov ? support_of(load_covariogram(file)) : difference_set(load_points(file));
      if (fmt == Format::records) {
        out << "record=diffset size=" << d.size() << " points=" << compact(d) << '\n';
      } else {
        write_points(out, d);
      }
      return kExitOk;
    }
    if (inv->parsed()) {
      const InvariantRecord r = from_cov ? invariants_from_covariogram(load_covariogram(file))
                                         : invariants_direct(load_points(file));
      print_invariants(out, r, fmt);
      return kExitOk;
    }
    if (edges->parsed()) {
      const Covariogram g = load_input_covariogram(file, from_cov);
      const EdgePairSketch s = edge_pair_from_covariogram(g, parse_vector_arg(normal_arg, 2));
      if (fmt == Format::records) {
        out << "record=edge_pair normal=" << compact(s.normal) << " long_size=" << s.long_row.size()
            << " short_size=" << s.short_row.size() << " long=" << compact(s.long_row)
            << " short=" << compact(s.short_row) << '\n';
      } else {
        out << "normal: " << to_string(s.normal) << "\nlong_row: " << to_string(s.long_row)
            << "\nshort_row: " << to_string(s.short_row) << '\n';
      }
      return kExitOk;
    }
    if (recon->parsed()) {
      const Covariogram g = load_covariogram(file);
      if (g.dim() != 2) throw Error(file + ":0: reconstruct needs a planar covariogram");
      const auto [bw, bh] = box_arg.empty() ? default_box(g) : parse_box(box_arg);
      const Verdict v = determination_verdict(g, bw, bh, jobs);
      if (fmt == Format::records) {
        out << "record=verdict kind=" << to_string(v.kind) << " classes=" << v.count()
            << " box=" << bw << 'x' << bh << '\n';
        for (std::size_t i = 0; i < v.classes.size(); ++i) {
          out << "record=class index=" << i + 1 << " points=" << compact(v.classes[i]) << '\n';
        }
      } else {
        out << "verdict: " << to_string(v.kind) << " classes=" << v.count() << " box=" << bw << 'x'
            << bh << '\n';
        for (std::size_t i = 0; i < v.classes.size(); ++i) {
          out << "# class " << i + 1 << '\n' << format_points(v.classes[i]);
        }
      }
      return kExitOk;
    }
    if (convex->parsed()) {
      const bool ok = is_lattice_convex(load_points(file));
      out << (fmt == Format::records ? "record=check_convex " : "") << "lattice_convex="
          << yes_no(ok) << '\n';
      return ok ? kExitOk : kExitNegative;
    }
    if (canon->parsed()) {
      const LatticeSet c = canonical_form(load_points(file));
      if (fmt == Format::records) {
        out << "record=canonical points=" << compact(c) << '\n';
      } else {
        write_points(out, c);
      }
      return kExitOk;
    }
    if (affine->parsed()) {
      const auto m = affine_equivalent(load_points(file), load_points(file2));
      out << (fmt == Format::records ? "record=affine_equiv " : "")
          << "equivalent=" << yes_no(m.has_value());
      if (m) out << " map=" << to_string(*m);
      out << '\n';
      return m ? kExitOk : kExitNegative;
    }
    if (gen->parsed()) {
      const WidthOneParams params(k_param, l_param);
      const HexagonParams hex = parse_hex(hex_arg);
      const MirrorPairReport r = corollary_pair(params, hex);
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".K.pts", r.k);
        write_file(out_prefix + ".L.pts", r.l);
      }
      print_pair(out, r, fmt,
                 " k=" + std::to_string(k_param) + " l=" + std::to_string(l_param) +
                     " hex=" + to_string(hex));
      return kExitOk;
    }
    if (thm->parsed()) {
      const WidthOneParams params(k_param, l_param);
      const LatticeSet s = load_points(file);
      const bool ci = condition_i(s, params), cii = condition_ii(s, params);
      out << (fmt == Format::records ? "record=thm22 " : "") << "condition_i=" << yes_no(ci)
          << " condition_ii=" << yes_no(cii) << '\n';
      return ci == cii ? kExitOk : kExitNegative;
    }
    if (prod->parsed()) {
      const MirrorPairReport r = product_pair(load_points(file), load_points(file2));
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".K.pts", r.k);
        write_file(out_prefix + ".L.pts", r.l);
      }
      print_pair(out, r, fmt, "");
      return kExitOk;
    }
    if (search->parsed()) {
      const auto [bw, bh] = parse_box(box_arg);
      SearchOptions opts;
      opts.jobs = jobs;
      opts.match_corollary = match;
      opts.allow_large = allow_large;
      const SearchReport rep = homometric_classes(bw, bh, opts);
      print_search(out, err, rep, fmt);
      if (fail_unmatched && match && rep.matched_count() != rep.pair_count()) return kExitNegative;
      return kExitOk;
    }
    if (decomp->parsed()) {
      const WidthOneParams params(k_param, l_param);
      const LatticeVector p = parse_vector_arg(point_arg, 2);
      const PlaneDecomposition d = decompose_plane(p, params);
      const LatticeVector c = *SublatticeBasis(params).coordinates(d.lattice_part);
      if (fmt == Format::records) {
        out << "record=decomposition point=" << compact(p) << " lattice=" << compact(d.lattice_part)
            << " tile=" << compact(d.tile_part) << " i=" << c[0] << " j=" << c[1] << '\n';
      } else {
        out << "lattice=" << to_string(d.lattice_part) << " tile=" << to_string(d.tile_part)
            << " coords=" << to_string(c) << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace latcov
