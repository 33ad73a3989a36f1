#include "tvb/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>

namespace {

void add_common(CLI::App* cmd, tvb::RunManifest& m) {
  cmd->add_option("--out", m.out_path, "output file (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers for Tverberg-type partitions, skeleton barycenters, "
               "deleted products, and Tverberg-number bounds"};
  app.require_subcommand(1);

  tvb::RunManifest m;

  auto* bary = app.add_subcommand("barycenter",
                                  "write a point of a polytope as the average of r points of "
                                  "the k-skeleton");
  bary->add_option("--polytope", m.polytope_path, "polytope JSON")->required();
  bary->add_option("--point", m.point_text, "target point, e.g. \"0,1/2\"")->required();
  bary->add_option("-k", m.k, "skeleton dimension")->required();
  bary->add_option("-r", m.r, "number of points")->required();
  bary->add_flag("--recursive", m.recursive, "use the prime-factor decomposition route");
  add_common(bary, m);

  auto* tve = app.add_subcommand("tverberg", "r-fold Tverberg partition of an affine map");
  tve->add_option("--config", m.config_path, "configuration JSON");
  tve->add_option("-r", m.r, "number of faces")->required();
  tve->add_option("--trials", m.trials, "run a seeded random trial suite instead");
  tve->add_option("--seed", m.seed, "trial suite seed");
  tve->add_option("-d", m.d, "trial dimension");
  tve->add_option("-n", m.n, "trial N (default (r-1)(d+1))");
  add_common(tve, m);

  auto* vkf = app.add_subcommand("vkf", "skeleton-constrained partition (faces of dim <= k)");
  vkf->add_option("--config", m.config_path, "configuration JSON");
  vkf->add_option("-r", m.r, "number of faces")->required();
  vkf->add_option("-k", m.k, "skeleton dimension")->required();
  vkf->add_option("--trials", m.trials, "run a seeded random trial suite instead");
  vkf->add_option("--seed", m.seed, "trial suite seed");
  vkf->add_option("-d", m.d, "trial dimension");
  vkf->add_option("-n", m.n, "trial N (default (r-1)(d+2))");
  add_common(vkf, m);

  auto* col = app.add_subcommand("colored", "rainbow-constrained partition");
  col->add_option("--config", m.config_path, "configuration JSON");
  col->add_option("--colors", m.colors_path, "colors JSON (overrides the configuration's)");
  col->add_option("-r", m.r, "number of faces")->required();
  col->add_option("--trials", m.trials, "run a seeded random trial suite instead");
  col->add_option("--seed", m.seed, "trial suite seed");
  col->add_option("-d", m.d, "trial dimension");
  col->add_option("-n", m.n, "trial N");
  add_common(col, m);

  auto* dp = app.add_subcommand("delprod",
                                "deleted r-fold product: f-vector, homology, symmetry report");
  dp->add_option("--config", m.config_path, "simplicial complex JSON")->required();
  dp->add_option("-r", m.r, "number of factors")->required();
  add_common(dp, m);

  auto* lift = app.add_subcommand("lift", "join lift of a configuration");
  lift->add_option("--config", m.config_path, "configuration JSON")->required();
  lift->add_option("-k", m.k, "join factor")->required();
  add_common(lift, m);

  auto* bnd = app.add_subcommand("bounds", "Tverberg number bounds report");
  bnd->add_option("-r", m.r, "number of faces")->required();
  bnd->add_option("-d", m.d, "dimension");
  bnd->add_option("--table", m.table_dmax, "emit a Markdown table for d = 1..DMAX");
  add_common(bnd, m);

  auto* ver = app.add_subcommand("verify", "re-check a certificate against its problem file");
  ver->add_option("certificate", m.certificate_path, "certificate JSON")->required();
  ver->add_option("problem", m.problem_path, "problem JSON")->required();

  CLI11_PARSE(app, argc, argv);

  using Command = tvb::RunManifest::Command;
  if (bary->parsed()) m.command = Command::barycenter;
  else if (tve->parsed()) m.command = Command::tverberg;
  else if (vkf->parsed()) m.command = Command::vkf;
  else if (col->parsed()) m.command = Command::colored;
  else if (dp->parsed()) m.command = Command::delprod;
  else if (lift->parsed()) m.command = Command::lift;
  else if (bnd->parsed()) m.command = Command::bounds;
  else if (ver->parsed()) m.command = Command::verify;

  return tvb::run(m);
}
