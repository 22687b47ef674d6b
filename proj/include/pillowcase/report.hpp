#pragma once

#include <iosfwd>

#include "pillowcase/chain_complex.hpp"
#include "pillowcase/intersect.hpp"
#include "pillowcase/svg.hpp"

namespace pillowcase {

void write_report_tsv(std::ostream& os, const GeneratorReport& rep);
void write_report_json(std::ostream& os, const GeneratorReport& rep,
                       const std::vector<ZeroSetComponent>* trace = nullptr);

void write_trace_tsv(std::ostream& os, const std::vector<ZeroSetComponent>& comps,
                     const std::vector<LabeledPath>& images);

void write_table_tsv(std::ostream& os, const std::vector<TableRow>& rows);
void write_table_json(std::ostream& os, const std::vector<TableRow>& rows);

// pillowcase diagram: diagonal arc, restriction curves, perturbed circle(s),
// labeled generators
RenderSpec diagram(const GeneratorReport& rep, const std::vector<LabeledPath>& restriction,
                   const PerturbationData& pert);

}  // namespace pillowcase
