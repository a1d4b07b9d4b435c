// Python bindings. Graphs, words and maps cross the boundary in their text
// forms so that files written by the CLI can be used directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "raag/auth.hpp"
#include "raag/errors.hpp"
#include "raag/graph_io.hpp"
#include "raag/raag.hpp"
#include "raag/sharing.hpp"

namespace py = pybind11;
using namespace raag;

namespace {

constexpr std::uint64_t kSearchBudget = 10'000'000;

std::vector<std::string> format_words(const sharing::WordColumn& wc) {
  std::vector<std::string> out;
  for (const auto& w : wc.words) out.push_back(format_word(w));
  return out;
}

sharing::WordColumn parse_words(const std::vector<std::string>& words) {
  sharing::WordColumn wc;
  for (const auto& w : words) wc.words.push_back(parse_word(w));
  return wc;
}

template <typename Key>
std::string transcript(const Key& key, std::size_t rounds, const std::string& strategy,
                       std::uint64_t prover_seed, std::uint64_t verifier_seed) {
  return auth::format_transcript(
      auth::run_protocol(key, rounds, auth::parse_strategy(strategy), prover_seed, verifier_seed));
}

}  // namespace

PYBIND11_MODULE(_raagcrypt, m) {
  m.doc() = "Right-angled Artin groups: word problem, secret sharing, authentication";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OracleBoundExceeded>(m, "OracleBoundExceeded", PyExc_RuntimeError);

  m.def("random_graph", [](std::size_t n, double p, std::uint64_t seed) { return format_graph(random_graph(n, p, seed)); },
        py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("validate_graph", [](const std::string& text) {
    std::vector<std::string> out;
    for (const auto& v : validate_graph(parse_graph_description(text))) out.push_back(to_string(v));
    return out;
  }, py::arg("graph"), "Violation messages; empty if the graph is simplicial.");

  m.def("is_trivial", [](const std::string& graph, const std::string& word) {
    return is_trivial(Raag(parse_graph(graph)), parse_word(word));
  }, py::arg("graph"), py::arg("word"));
  m.def("oracle_is_trivial", [](const std::string& graph, const std::string& word, std::size_t bound) {
    return oracle_is_trivial(Raag(parse_graph(graph)), parse_word(word), bound);
  }, py::arg("graph"), py::arg("word"), py::arg("bound") = 14);
  m.def("sample_trivial_word", [](const std::string& graph, std::size_t length, std::uint64_t seed) {
    return format_word(sample_trivial_word(Raag(parse_graph(graph)), length, seed));
  }, py::arg("graph"), py::arg("length"), py::arg("seed"));
  m.def("sample_nontrivial_word", [](const std::string& graph, std::size_t length, std::uint64_t seed) {
    return format_word(sample_nontrivial_word(Raag(parse_graph(graph)), length, seed));
  }, py::arg("graph"), py::arg("length"), py::arg("seed"));

  m.def("find_graph_homomorphism", [](const std::string& source, const std::string& target) -> py::object {
    const auto r = find_graph_homomorphism(parse_graph(source), parse_graph(target), kSearchBudget);
    if (r.status == SearchStatus::budget_exhausted) throw std::runtime_error("search budget exhausted");
    if (!r.map) return py::none();
    return py::cast(r.map->labels());
  }, py::arg("source"), py::arg("target"), "List of (source, target) label pairs, or None.");
  m.def("verify_graph_homomorphism", [](const std::string& source, const std::string& target, const LabelAssignment& f) {
    return verify_graph_homomorphism(VertexMap::from_labels(parse_graph(source), parse_graph(target), f));
  }, py::arg("source"), py::arg("target"), py::arg("mapping"));

  m.def("split_bits_nn", [](const std::string& bits, std::size_t n, std::uint64_t seed) {
    std::vector<std::string> out;
    for (const auto& c : sharing::split_bits_nn(sharing::parse_bits(bits), n, seed)) out.push_back(sharing::format_bits(c));
    return out;
  }, py::arg("bits"), py::arg("n"), py::arg("seed"));
  m.def("reconstruct_nn", [](const std::vector<std::string>& columns) {
    std::vector<sharing::BitColumn> cs;
    for (const auto& c : columns) cs.push_back(sharing::parse_bits(c));
    return sharing::format_bits(sharing::reconstruct_nn(cs));
  }, py::arg("columns"));
  m.def("encode_column", [](const std::string& graph, const std::string& bits, std::size_t length, std::uint64_t seed) {
    return format_words(sharing::encode_column(Raag(parse_graph(graph)), sharing::parse_bits(bits), length, seed));
  }, py::arg("graph"), py::arg("bits"), py::arg("length"), py::arg("seed"));
  m.def("decode_column", [](const std::string& graph, const std::vector<std::string>& words) {
    return sharing::format_bits(sharing::decode_column(Raag(parse_graph(graph)), parse_words(words)));
  }, py::arg("graph"), py::arg("words"));

  m.def("shamir_split", [](std::uint64_t x, std::uint64_t p, std::size_t t, std::size_t n, std::uint64_t seed) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const auto& pt : sharing::shamir_split(x, p, t, n, seed).points) out.emplace_back(pt.index, pt.value);
    return out;
  }, py::arg("x"), py::arg("p"), py::arg("t"), py::arg("n"), py::arg("seed"));
  m.def("lagrange_reconstruct", [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points, std::uint64_t p,
                                   std::size_t t) {
    std::vector<sharing::ShamirPoint> pts;
    for (const auto& [i, y] : points) pts.push_back({i, y});
    return sharing::lagrange_reconstruct(pts, p, t);
  }, py::arg("points"), py::arg("p"), py::arg("t"));

  m.def("run_protocol", [](const std::string& scheme, std::uint64_t key_seed, std::size_t rounds,
                           const std::string& strategy, std::uint64_t prover_seed, std::uint64_t verifier_seed) {
    if (auth::parse_scheme(scheme) == auth::Scheme::hom) {
      return transcript(auth::hom_keygen({}, key_seed), rounds, strategy, prover_seed, verifier_seed);
    }
    return transcript(auth::sub_keygen({}, key_seed), rounds, strategy, prover_seed, verifier_seed);
  }, py::arg("scheme"), py::arg("key_seed"), py::arg("rounds"), py::arg("strategy"), py::arg("prover_seed"),
     py::arg("verifier_seed"), "Transcript text for a freshly generated key.");
  m.def("simulate", [](const std::string& scheme, std::uint64_t key_seed, const std::string& strategy,
                       std::size_t rounds, std::uint64_t trials, std::uint64_t seed) {
    const auto s = auth::parse_strategy(strategy);
    py::gil_scoped_release release;
    const auto r = auth::parse_scheme(scheme) == auth::Scheme::hom
                       ? auth::simulate(auth::hom_keygen({}, key_seed), s, rounds, trials, seed)
                       : auth::simulate(auth::sub_keygen({}, key_seed), s, rounds, trials, seed);
    return std::make_pair(r.accepted, r.trials);
  }, py::arg("scheme"), py::arg("key_seed"), py::arg("strategy"), py::arg("rounds"), py::arg("trials"),
     py::arg("seed"), "(accepted, trials)");
}
