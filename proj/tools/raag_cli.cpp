// raag: command-line front end for the graph, word-problem, sharing and
// authentication code. Exit status: 0 success, 1 semantic negative
// (nontrivial, reject, mismatch, invalid graph), 2 usage or format error.

#include <CLI11.hpp>

#include <charconv>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "raag/auth.hpp"
#include "raag/bench.hpp"
#include "raag/errors.hpp"
#include "raag/graph_io.hpp"
#include "raag/raag.hpp"
#include "raag/random.hpp"
#include "raag/sharing.hpp"

namespace fs = std::filesystem;
using namespace raag;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

SimplicialGraph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::uint64_t parse_u64(const std::string& text) {
  const auto t = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ParseError("expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::string share_path(const std::string& dir, std::size_t j) {
  return (fs::path(dir) / ("share_" + std::to_string(j) + ".txt")).string();
}
std::string relators_path(const std::string& dir, std::size_t j) {
  return (fs::path(dir) / ("relators_" + std::to_string(j) + ".graph")).string();
}

struct Cli {
  int status = kOk;

  // Shared option storage; each subcommand only reads what it declares.
  std::uint64_t seed = 0;
  std::string out;
  std::string graph_path;
  std::string word_path;
  std::string key_dir;
  std::string commitment_path;
  std::string session_path;
  std::string response_path;
  std::size_t vertices = 0;
  double edge_prob = 0.5;
  std::size_t length = 0;
  bool nontrivial = false;

  std::string secret;
  std::size_t participants = 0;
  std::size_t generators = 4;
  std::size_t word_length = 12;
  std::uint64_t prime = 0;
  std::size_t threshold = 0;
  std::optional<std::size_t> bits;
  std::string share_file;
  std::vector<std::string> decoded_files;
  std::optional<std::string> expect;

  std::string scheme;
  auth::HomParams hom;
  auth::SubParams sub;
  std::size_t commit_size = auth::HomParams{}.commitment_vertices;
  int challenge = 0;
  std::string strategy = "honest";
  std::size_t rounds = 1;
  std::uint64_t trials = 1;
  unsigned threads = 0;

  std::vector<std::size_t> lengths;
  std::size_t repetitions = 5;

  // --- graph ---------------------------------------------------------------

  void graph_gen() { emit(out, format_graph(random_graph(vertices, edge_prob, seed))); }

  void graph_validate() {
    const auto violations = validate_graph(parse_graph_description(read_text_file(graph_path)));
    if (violations.empty()) {
      std::cout << "ok\n";
      return;
    }
    for (const auto& v : violations) std::cout << to_string(v) << "\n";
    status = kNegative;
  }

  // --- words -----------------------------------------------------------------

  void word_check() {
    const Raag group(load_graph(graph_path));
    const bool trivial = is_trivial(group, parse_word(read_text_file(word_path)));
    std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
    status = trivial ? kOk : kNegative;
  }

  void word_sample() {
    const Raag group(load_graph(graph_path));
    const auto w = nontrivial ? sample_nontrivial_word(group, length, seed)
                              : sample_trivial_word(group, length, seed);
    emit(out, format_word(w) + "\n");
  }

  // --- sharing -------------------------------------------------------------

  template <typename Share>
  void write_shares(const std::vector<Share>& shares) {
    fs::create_directories(out);
    for (const auto& s : shares) {
      write_text_file(share_path(out, s.participant), sharing::format_share(sharing::share_file(s)));
      write_text_file(relators_path(out, s.participant), format_graph(s.relators));
      std::cout << share_path(out, s.participant) << "\n" << relators_path(out, s.participant) << "\n";
    }
  }

  void deal_nn() {
    const auto column = sharing::parse_bits(secret);
    const auto setup = sharing::make_setup_nn(participants, column.size(), generators, edge_prob,
                                              derive_seed(seed, 0));
    write_shares(sharing::deal_nn(setup, column, word_length, derive_seed(seed, 1)));
  }

  void deal_tn() {
    const auto x = parse_u64(secret);
    const auto setup = sharing::make_setup_tn(x, prime, threshold, participants, generators, edge_prob,
                                              derive_seed(seed, 0), bits);
    write_shares(sharing::deal_tn(setup, word_length, derive_seed(seed, 1)));
  }

  void decode_share() {
    const auto share = sharing::parse_share(read_text_file(share_file));
    const auto decoded = sharing::decode_share_file(share, load_graph(graph_path));
    emit(out, sharing::format_decoded(decoded));
  }

  std::vector<sharing::DecodedShare> load_decoded(sharing::SchemeKind kind) {
    std::vector<sharing::DecodedShare> out_shares;
    for (const auto& path : decoded_files) {
      auto d = sharing::parse_decoded(read_text_file(path));
      if (d.scheme != kind) throw DomainError("'" + path + "' belongs to the other scheme");
      for (const auto& prev : out_shares) {
        if (prev.participant == d.participant) {
          throw DomainError("participant " + std::to_string(d.participant) + " given twice");
        }
      }
      out_shares.push_back(std::move(d));
    }
    return out_shares;
  }

  void reconstruct_nn() {
    std::vector<sharing::BitColumn> columns;
    for (auto& d : load_decoded(sharing::SchemeKind::nn)) columns.push_back(std::move(d.bits));
    const auto bits_text = sharing::format_bits(sharing::reconstruct_nn(columns));
    std::cout << "secret " << bits_text << "\n";
    if (expect && trim(*expect) != bits_text) {
      std::cout << "mismatch\n";
      status = kNegative;
    }
  }

  void reconstruct_tn() {
    const auto shares = load_decoded(sharing::SchemeKind::tn);
    if (shares.empty()) throw DomainError("no shares given");
    std::vector<sharing::ShamirPoint> points;
    for (const auto& d : shares) {
      if (d.p != shares.front().p || d.t != shares.front().t) throw DomainError("shares disagree on p or t");
      points.push_back({d.participant, d.value});
    }
    const auto x = sharing::lagrange_reconstruct(points, shares.front().p, shares.front().t);
    std::cout << "secret " << x << "\n";
    if (expect && parse_u64(*expect) != x) {
      std::cout << "mismatch\n";
      status = kNegative;
    }
  }

  // --- authentication ------------------------------------------------------

  void auth_keygen() {
    switch (auth::parse_scheme(scheme)) {
      case auth::Scheme::hom: auth::write_key(out, auth::hom_keygen(hom, seed)); break;
      case auth::Scheme::sub: auth::write_key(out, auth::sub_keygen(sub, seed)); break;
    }
  }

  void auth_commit() {
    const auto c = [&] {
      if (auth::read_scheme(key_dir) == auth::Scheme::hom) {
        return auth::hom_commit(auth::read_hom_key(key_dir), commit_size, seed);
      }
      return auth::sub_commit(auth::read_sub_key(key_dir), seed);
    }();
    write_text_file(commitment_path, format_graph(c.graph));
    write_text_file(session_path, format_vertex_map(c.session.labels()));
  }

  void auth_challenge() { emit(out, std::to_string(Rng(seed)() & 1U) + "\n"); }

  void auth_respond() {
    const auto graph = load_graph(commitment_path);
    const auto session = parse_vertex_map(read_text_file(session_path));
    const auto response = [&] {
      if (auth::read_scheme(key_dir) == auth::Scheme::hom) {
        const auto key = auth::read_hom_key(key_dir);
        auth::RoundState state({graph, VertexMap::from_labels(graph, key.pub.source, session)});
        state.set_challenge(challenge);
        return auth::hom_respond(state, key);
      }
      const auto key = auth::read_sub_key(key_dir);
      auth::RoundState state({graph, VertexMap::from_labels(graph, key.pub.ambient, session)});
      state.set_challenge(challenge);
      return auth::sub_respond(state, key);
    }();
    emit(out, format_vertex_map(response.labels()));
  }

  void auth_check() {
    const auto graph = load_graph(commitment_path);
    const auto response = parse_vertex_map(read_text_file(response_path));
    bool accepted = false;
    switch (auth::read_scheme(key_dir)) {
      case auth::Scheme::hom:
        accepted = auth::hom_verify(graph, challenge, response, auth::read_hom_public(key_dir));
        break;
      case auth::Scheme::sub:
        accepted = auth::sub_verify(graph, challenge, response, auth::read_sub_public(key_dir));
        break;
    }
    std::cout << (accepted ? "accept" : "reject") << "\n";
    status = accepted ? kOk : kNegative;
  }

  void auth_run() {
    const auto s = auth::parse_strategy(strategy);
    auth::Transcript t;
    switch (auth::read_scheme(key_dir)) {
      case auth::Scheme::hom:
        t = auth::run_protocol(auth::read_hom_key(key_dir), rounds, s, derive_seed(seed, 0), derive_seed(seed, 1));
        break;
      case auth::Scheme::sub:
        t = auth::run_protocol(auth::read_sub_key(key_dir), rounds, s, derive_seed(seed, 0), derive_seed(seed, 1));
        break;
    }
    emit(out, auth::format_transcript(t));
    status = t.accept ? kOk : kNegative;
  }

  void auth_simulate() {
    const auto s = auth::parse_strategy(strategy);
    auth::SimulationResult r;
    switch (auth::read_scheme(key_dir)) {
      case auth::Scheme::hom: r = auth::simulate(auth::read_hom_key(key_dir), s, rounds, trials, seed, threads); break;
      case auth::Scheme::sub: r = auth::simulate(auth::read_sub_key(key_dir), s, rounds, trials, seed, threads); break;
    }
    std::ostringstream os;
    os << "strategy " << strategy << "\nrounds " << rounds << "\ntrials " << r.trials << "\naccepted "
       << r.accepted << "\nrate " << r.rate() << "\n";
    std::cout << os.str();
  }

  // --- benchmark -----------------------------------------------------------

  void bench_word() {
    const Raag group(load_graph(graph_path));
    const auto rows = bench_word_problem(group, lengths, repetitions, seed);
    std::ostringstream os;
    os.precision(6);
    for (const auto& r : rows) {
      os << "length " << r.length << " mean " << r.mean_seconds << " samples";
      for (auto s : r.seconds) os << " " << s;
      os << "\n";
    }
    os << "slope " << loglog_slope(rows) << "\n";
    std::cout << os.str();
  }
};

template <typename F>
void on_run(CLI::App* app, Cli& cli, F method) {
  app->callback([&cli, method] { (cli.*method)(); });
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"Right-angled Artin group toolkit: word problem, secret sharing, authentication"};
  app.name("raag");
  app.require_subcommand(1);

  auto seed_opt = [&cli](CLI::App* sub) { sub->add_option("--seed", cli.seed, "Random seed")->required(); };

  // graph
  auto* graph = app.add_subcommand("graph", "Graph utilities");
  graph->require_subcommand(1);
  auto* gen = graph->add_subcommand("gen", "Random G(n, p) graph");
  gen->add_option("--vertices", cli.vertices, "Number of vertices")->required();
  gen->add_option("--edge-prob", cli.edge_prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", cli.out, "Output file (default stdout)");
  seed_opt(gen);
  on_run(gen, cli, &Cli::graph_gen);
  auto* validate = graph->add_subcommand("validate", "Check a graph file");
  validate->add_option("graph", cli.graph_path, "Graph file")->required();
  on_run(validate, cli, &Cli::graph_validate);

  // word
  auto* word = app.add_subcommand("word", "Word problem utilities");
  word->require_subcommand(1);
  auto* check = word->add_subcommand("check", "Decide whether a word is trivial");
  check->add_option("--graph", cli.graph_path, "Graph file")->required();
  check->add_option("--word", cli.word_path, "Word file")->required();
  on_run(check, cli, &Cli::word_check);
  auto* sample = word->add_subcommand("sample", "Sample a trivial (or nontrivial) word");
  sample->add_option("--graph", cli.graph_path, "Graph file")->required();
  sample->add_option("--length", cli.length, "Target length")->required();
  sample->add_flag("--nontrivial", cli.nontrivial, "Sample a nontrivial word");
  sample->add_option("--out", cli.out, "Output file (default stdout)");
  seed_opt(sample);
  on_run(sample, cli, &Cli::word_sample);

  // sharing
  auto deal_common = [&](CLI::App* sub) {
    sub->add_option("--participants,-n", cli.participants, "Number of participants")->required();
    sub->add_option("--generators", cli.generators, "Public generators per participant graph");
    sub->add_option("--edge-prob", cli.edge_prob, "Relator edge probability")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--word-length", cli.word_length, "Target word length");
    sub->add_option("--out", cli.out, "Output directory")->required();
    seed_opt(sub);
  };
  auto* dnn = app.add_subcommand("deal-nn", "Deal an (n,n) bit-column secret");
  dnn->add_option("--secret", cli.secret, "Secret bits, e.g. 1011")->required();
  deal_common(dnn);
  on_run(dnn, cli, &Cli::deal_nn);
  auto* dtn = app.add_subcommand("deal-tn", "Deal a (t,n) secret in Z_p");
  dtn->add_option("--secret", cli.secret, "Secret integer x < p")->required();
  dtn->add_option("--prime,-p", cli.prime, "Prime modulus")->required();
  dtn->add_option("--threshold,-t", cli.threshold, "Threshold t")->required();
  dtn->add_option("--bits", cli.bits, "Bits per share column (default: bit width of p)");
  deal_common(dtn);
  on_run(dtn, cli, &Cli::deal_tn);

  auto* dec = app.add_subcommand("decode-share", "Decode a share with its relator graph");
  dec->add_option("--share", cli.share_file, "Share file")->required();
  dec->add_option("--relators", cli.graph_path, "Relator graph file")->required();
  dec->add_option("--out", cli.out, "Output file (default stdout)");
  on_run(dec, cli, &Cli::decode_share);

  auto* rnn = app.add_subcommand("reconstruct-nn", "XOR decoded (n,n) shares");
  rnn->add_option("decoded", cli.decoded_files, "Decoded share files")->required();
  rnn->add_option("--expect", cli.expect, "Exit 1 unless the secret equals this");
  on_run(rnn, cli, &Cli::reconstruct_nn);
  auto* rtn = app.add_subcommand("reconstruct-tn", "Interpolate decoded (t,n) shares");
  rtn->add_option("decoded", cli.decoded_files, "Decoded share files")->required();
  rtn->add_option("--expect", cli.expect, "Exit 1 unless the secret equals this");
  on_run(rtn, cli, &Cli::reconstruct_tn);

  // auth
  auto* auth_cmd = app.add_subcommand("auth", "Authentication schemes");
  auth_cmd->require_subcommand(1);
  auto* keygen = auth_cmd->add_subcommand("keygen", "Generate a planted key pair");
  keygen->add_option("--scheme", cli.scheme, "hom or sub")->required()->check(CLI::IsMember({"hom", "sub"}));
  keygen->add_option("--out", cli.out, "Key directory")->required();
  keygen->add_option("--source-vertices", cli.hom.source_vertices, "hom: vertices of G1");
  keygen->add_option("--target-vertices", cli.hom.target_vertices, "hom: vertices of G2");
  keygen->add_option("--ambient-vertices", cli.sub.ambient_vertices, "sub: vertices of the ambient graph");
  keygen->add_option("--subset-size", cli.sub.subset_size, "sub: size of each subset");
  seed_opt(keygen);
  on_run(keygen, cli, &Cli::auth_keygen);

  auto* prove = auth_cmd->add_subcommand("prove", "Prover steps");
  prove->require_subcommand(1);
  auto* commit = prove->add_subcommand("commit", "Publish a commitment graph, keep the session map");
  commit->add_option("--key", cli.key_dir, "Key directory")->required();
  commit->add_option("--commitment", cli.commitment_path, "Output commitment graph")->required();
  commit->add_option("--session", cli.session_path, "Output session map (private)")->required();
  commit->add_option("--size", cli.commit_size, "hom: commitment vertices");
  seed_opt(commit);
  on_run(commit, cli, &Cli::auth_commit);
  auto* respond = prove->add_subcommand("respond", "Answer a challenge");
  respond->add_option("--key", cli.key_dir, "Key directory")->required();
  respond->add_option("--commitment", cli.commitment_path, "Commitment graph")->required();
  respond->add_option("--session", cli.session_path, "Session map")->required();
  respond->add_option("--challenge", cli.challenge, "0 or 1")->required()->check(CLI::Range(0, 1));
  respond->add_option("--out", cli.out, "Output response map (default stdout)");
  on_run(respond, cli, &Cli::auth_respond);

  auto* verify = auth_cmd->add_subcommand("verify", "Verifier steps");
  verify->require_subcommand(1);
  auto* chal = verify->add_subcommand("challenge", "Draw a challenge bit");
  chal->add_option("--out", cli.out, "Output file (default stdout)");
  seed_opt(chal);
  on_run(chal, cli, &Cli::auth_challenge);
  auto* vcheck = verify->add_subcommand("check", "Accept or reject a response");
  vcheck->add_option("--key", cli.key_dir, "Key directory (public part is read)")->required();
  vcheck->add_option("--commitment", cli.commitment_path, "Commitment graph")->required();
  vcheck->add_option("--challenge", cli.challenge, "0 or 1")->required()->check(CLI::Range(0, 1));
  vcheck->add_option("--response", cli.response_path, "Response map")->required();
  on_run(vcheck, cli, &Cli::auth_check);

  auto strategy_opts = [&](CLI::App* sub) {
    sub->add_option("--key", cli.key_dir, "Key directory")->required();
    sub->add_option("--strategy", cli.strategy, "honest, cheat-guess-0, cheat-guess-1 or cheat-random")
        ->check(CLI::IsMember({"honest", "cheat-guess-0", "cheat-guess-1", "cheat-random"}));
    sub->add_option("--rounds", cli.rounds, "Rounds per run")->check(CLI::PositiveNumber);
    seed_opt(sub);
  };
  auto* run = auth_cmd->add_subcommand("run", "Run the protocol and print the transcript");
  strategy_opts(run);
  run->add_option("--out", cli.out, "Transcript file (default stdout)");
  on_run(run, cli, &Cli::auth_run);
  auto* simulate = auth_cmd->add_subcommand("simulate", "Monte Carlo acceptance rate");
  strategy_opts(simulate);
  simulate->add_option("--trials", cli.trials, "Number of protocol runs")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--threads", cli.threads, "Worker threads (0 = all cores)");
  on_run(simulate, cli, &Cli::auth_simulate);

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  auto* bword = bench->add_subcommand("word", "Time the word-problem solver on trivial words");
  bword->add_option("--graph", cli.graph_path, "Graph file")->required();
  bword->add_option("--lengths", cli.lengths, "Ascending even lengths, at least 3")->required()->delimiter(',');
  bword->add_option("--repetitions", cli.repetitions, "Timed repetitions per length");
  seed_opt(bword);
  on_run(bword, cli, &Cli::bench_word);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return cli.status;
}
