#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kstab/error.hpp"
#include "kstab/model_io.hpp"
#include "kstab/report.hpp"

using namespace kstab;

namespace {

std::vector<std::int64_t> parse_point(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError, "bad point coordinate '" + item + "'");
    }
  }
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact K-stability invariants of toric test configurations"};
  app.require_subcommand(1);

  std::string model_path;
  auto* df = app.add_subcommand("df", "Donaldson-Futaki invariant");
  df->add_option("model", model_path, "model file")->required();

  std::vector<std::string> points;
  std::int64_t level = 0;
  bool find = false;
  auto* chow = app.add_subcommand("chow", "Hilbert-Mumford and Chow weights of a point on the central fibre");
  chow->add_option("model", model_path, "model file")->required();
  chow->add_option("--point", points, "lattice point of kP in the support, as x,y[,z]; repeat for more");
  chow->add_option("--level", level, "level k");
  chow->add_flag("--find", find, "search for a point with positive Chow weight");

  std::int64_t vertex_index = -1;
  std::string gammas;
  auto* blowup = app.add_subcommand("blowup", "gamma-expansion of F for the blowup of a vertex");
  blowup->add_option("model", model_path, "model file")->required();
  blowup->add_option("--vertex", vertex_index, "vertex index (lexicographic order)");
  blowup->add_option("--gammas", gammas, "gamma range a:b");

  auto* destab = app.add_subcommand("destabilize", "destabilizing certificate for a blowup");
  destab->add_option("model", model_path, "model file")->required();
  destab->add_option("--gammas", gammas, "gamma budget a:b (default 2:32)");

  std::int64_t bound = -1, budget = -1;
  int pieces = -1;
  std::string predicate;
  std::uint64_t seed = 0;
  std::size_t limit = 0;
  auto* search = app.add_subcommand("search", "enumerate PL functions on the model's polytope");
  search->add_option("model", model_path, "model file")->required();
  search->add_option("--bound", bound, "coefficient bound");
  search->add_option("--pieces", pieces, "pieces per function");
  search->add_option("--predicate", predicate,
                     "any, product, nonproduct, positive, nonpositive, negative, nonpositive-nonproduct, "
                     "vanishing-nonproduct");
  search->add_option("--budget", budget, "maximum number of functions examined");
  auto* seed_opt = search->add_option("--seed", seed, "random sampling with this seed");
  search->add_option("--limit", limit, "stop after this many hits");

  app.add_subcommand("selftest", "run the invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("selftest")) return run_selftest(std::cout) ? 0 : 3;

    const Model model = load_model(model_path);
    const auto& tc = model.config;

    if (app.got_subcommand(df)) {
      emit(to_json(donaldson_futaki(tc)));
    } else if (app.got_subcommand(chow)) {
      const std::int64_t k = level > 0 ? level : model.tasks.chow_level.value_or(1);
      if (find) {
        ChowSearchOptions opts{k, std::max<std::int64_t>(k, 3)};
        emit(to_json(find_positive_chow_point(tc, opts)));
      } else {
        if (points.empty()) throw Error(ErrorCode::kEmptySupport, "chow needs --point or --find");
        PointSupport q{k, {}};
        for (const auto& s : points) {
          const auto c = parse_point(s);
          if (static_cast<int>(c.size()) != tc.dim())
            throw Error(ErrorCode::kValidationError, "point '" + s + "' has the wrong dimension");
          q.support.emplace_back(std::span<const std::int64_t>(c));
        }
        std::sort(q.support.begin(), q.support.end());
        q.support.erase(std::unique(q.support.begin(), q.support.end()), q.support.end());
        emit(to_json(chow_weight(q, tc)));
      }
    } else if (app.got_subcommand(blowup)) {
      const auto& verts = tc.polytope().vertices();
      const auto idx = vertex_index >= 0 ? static_cast<std::size_t>(vertex_index) : model.tasks.vertex.value_or(0);
      if (idx >= verts.size())
        throw Error(ErrorCode::kValidationError, "vertex index " + std::to_string(idx) + " out of range");
      const auto range = !gammas.empty() ? parse_range(gammas) : model.tasks.gammas.value_or(std::pair{16, 32});
      BlowupOptions opts{model.tasks.chow_level.value_or(1)};
      const auto g = gamma_range(range.first, range.second);
      emit(to_json(blowup_df_series(tc, verts[idx], g, opts)));
    } else if (app.got_subcommand(destab)) {
      const auto range = !gammas.empty() ? parse_range(gammas) : model.tasks.gammas.value_or(std::pair{2, 32});
      DestabilizeOptions opts;
      opts.gamma_min = range.first;
      opts.gamma_max = range.second;
      if (model.tasks.chow_level) opts.chow = {*model.tasks.chow_level, std::max<std::int64_t>(*model.tasks.chow_level, 3)};
      const auto result = destabilize(tc, opts);
      emit(to_json(result));
      if (!result.certificate) {
        std::cerr << "no certificate: " << to_string(result.status) << '\n';
        return 2;
      }
    } else if (app.got_subcommand(search)) {
      const SearchTask task = model.tasks.search.value_or(SearchTask{});
      SearchOptions opts;
      opts.bound = bound >= 0 ? bound : task.bound.value_or(opts.bound);
      opts.pieces = pieces > 0 ? pieces : task.pieces.value_or(opts.pieces);
      opts.budget = budget > 0 ? budget : task.budget.value_or(opts.budget);
      opts.predicate = parse_predicate(!predicate.empty() ? predicate : task.predicate.value_or("any"));
      if (seed_opt->count() > 0) opts.seed = seed;
      else opts.seed = task.seed;
      opts.limit = limit;
      emit(to_json(search_configs(tc.polytope(), opts)));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
