#ifndef EVENHOLE_GENERATORS_HPP
#define EVENHOLE_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "evenhole/graph.hpp"

namespace evenhole {

/// SplitMix64 step. Child streams are derived from a parent seed and a
/// stream index, so no generator ever shares state with another.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

using Rng = std::mt19937_64;

namespace gen {

struct Gnp { int n; double p; };
struct Cycle { int k; };
struct PathGraph { int k; };
struct Complete { int k; };
struct Chordal { int n; int max_clique; };
/// Random block graph plus up to two extra nodes with random attachments.
struct Ect { int n; };
/// Diamond b1..b4 and three legs from b1, b2, b3 meeting at a center.
/// Leg lengths count edges from the foot to the center.
struct Beetle { std::array<int, 3> legs; };
/// Two ends joined by three internally disjoint paths of the given lengths.
struct Theta { std::array<int, 3> legs; };
/// Two random sides glued by complete X1-X2 and Y1-Y2 bundles, at most n
/// nodes in total.
struct TwoJoin { int n; };
struct Named { std::string id; };

}  // namespace gen

using GraphSpec = std::variant<gen::Gnp, gen::Cycle, gen::PathGraph, gen::Complete,
                               gen::Chordal, gen::Ect, gen::Beetle, gen::Theta,
                               gen::TwoJoin, gen::Named>;

/// "gnp:N:P", "cycle:K", "path:K", "complete:K", "chordal:N:C", "ect:N",
/// "beetle:A,B,C", "theta:A,B,C", "twojoin:N", "named:ID" with ID one of petersen,
/// beetle8, theta6, theta4. Throws InputError.
GraphSpec parse_graph_spec(std::string_view text);
std::string to_string(const GraphSpec& spec);

/// Deterministic in (spec, seed). Throws InputError on invalid parameters.
Graph generate(const GraphSpec& spec, std::uint64_t seed = 0);

Graph gnp(int n, double p, Rng& rng);
Graph cycle_graph(int k);
Graph path_graph(int k);
Graph complete_graph(int k);
Graph random_chordal(int n, int max_clique, Rng& rng);
Graph random_ect(int n, Rng& rng);
Graph random_two_join(int max_n, Rng& rng);
/// Nodes: b1..b4 as 0..3, then each leg from its foot outwards, center last.
Graph beetle_graph(const std::array<int, 3>& legs);
/// Nodes: the two ends as 0 and 1, then each leg's interior.
Graph theta_graph(const std::array<int, 3>& legs);
Graph named_graph(std::string_view id);

}  // namespace evenhole

#endif  // EVENHOLE_GENERATORS_HPP
