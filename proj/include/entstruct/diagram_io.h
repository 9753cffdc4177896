// Copyright 2026 The entstruct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTSTRUCT_DIAGRAM_IO_H
#define ENTSTRUCT_DIAGRAM_IO_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "entstruct/clustering.h"
#include "entstruct/ensembles.h"
#include "entstruct/metrics.h"
#include "json.hpp"

namespace entstruct {

inline constexpr std::string_view kDiagramSchema = "1";

/// A diagram plus, optionally, its metrics. Qubits are 1-based in every serialized form.
struct DiagramDocument {
    Diagram diagram;
    std::optional<MetricsReport> metrics;

    bool operator==(const DiagramDocument &other) const = default;
};

class DocumentError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const DiagramDocument &doc);
nlohmann::json to_json(const MetricsReport &m);
/// Strict: unknown or missing fields, a wrong schema version, and out-of-range qubits throw
/// DocumentError.
DiagramDocument document_from_json(const nlohmann::json &j);

/// Pretty-printed JSON with a trailing newline.
std::string format_document(const DiagramDocument &doc);
DiagramDocument parse_document(std::string_view text);

/// Graphviz source with one boxed subgraph per cluster, labeled "w=...".
std::string format_dot(const Diagram &d);

/// Indented tree, one node per line.
std::string format_text(const Diagram &d);

nlohmann::json to_json(const EnsembleStats &stats);

}  // namespace entstruct

#endif
