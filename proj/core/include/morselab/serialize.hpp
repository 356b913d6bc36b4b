#pragma once

#include <nlohmann/json.hpp>

#include "morselab/automata.hpp"
#include "morselab/diagrams.hpp"
#include "morselab/metrics.hpp"
#include "morselab/mltg.hpp"
#include "morselab/presentation.hpp"
#include "morselab/smallcancel.hpp"
#include "morselab/walks.hpp"

namespace morselab {

// Keys keep insertion order so that output bytes are stable.
using Json = nlohmann::ordered_json;

Json alphabet_to_json(Alphabet const& a);
Alphabet alphabet_from_json(Json const& j);

Json to_json(Presentation const& p);
Json to_json(FunctionSample const& f);
Json to_json(Alphabet const& a, PieceTable const& t);
Json to_json(Alphabet const& a, SmallCancellationVerdict const& v);
Json to_json(Alphabet const& a,
             SymmetrizedClosure const& c,
             IntersectionProfile const& prof);

// Diagram JSON: alphabet, vertices, edges {src, dst, label}, faces and
// boundary as dart lists (+k forwards along edge k-1, -k backwards), sides.
Json to_json(DiskDiagram const& d);
DiskDiagram diagram_from_json(Json const& j);

// Automaton JSON: alphabet, states, initial, accepts, edges {src, label,
// dst} in sorted order.
Json to_json(Automaton const& a);
Automaton automaton_from_json(Json const& j);

// {"support": [{"word": "a", "p": "1/4"}, ...], "generates": true}
StepMeasure step_measure_from_json(Json const& j, Alphabet const& a);
Json to_json(Alphabet const& a, StepMeasure const& mu);

Json to_json(CayleyBall const& ball, BoundaryMeasure const& m);
Json to_json(CayleyBall const& ball, GeodesicPath const& path);
Json to_json(CayleyBall const& ball, AuxPath const& ap);
Json to_json(Alphabet const& a, AuxAudit const& audit);

}  // namespace morselab
