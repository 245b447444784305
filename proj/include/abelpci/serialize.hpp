#pragma once

// JSON, DOT and text renderings. Objects keep insertion order so identical
// inputs always serialize to identical bytes.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "abelpci/cyclotome.hpp"
#include "abelpci/exactalg.hpp"
#include "abelpci/oracle.hpp"
#include "abelpci/pcidiagram.hpp"
#include "abelpci/verify.hpp"

namespace abelpci {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const AlgebraElement& a);
Json to_json(const CycloNumber& c);
Json to_json(const CycloAlgebraElement& a);

AlgebraElement algebra_element_from_json(GroupPtr group, const Json& j);
CycloNumber cyclo_number_from_json(const Json& j);

Json pci_list_json(const AbelianGroupSpec& spec, const std::vector<ComposedPci>& pcis);
std::string pci_list_text(const AbelianGroupSpec& spec, const std::vector<ComposedPci>& pcis);

// Reads back the output of pci_list_json.
std::pair<GroupPtr, std::vector<AlgebraElement>> parse_pci_list_json(const std::string& text);

Json diagram_json(const AbelianGroupSpec& spec, const std::vector<PciDiagram>& diagrams);
std::string diagram_text(const AbelianGroupSpec& spec, const std::vector<PciDiagram>& diagrams);
std::string diagram_dot(const AbelianGroupSpec& spec, const std::vector<PciDiagram>& diagrams);

Json wedderburn_json(const AbelianGroupSpec& spec, const std::vector<WedderburnProfile>& profiles);
std::string wedderburn_text(const AbelianGroupSpec& spec, const std::vector<WedderburnProfile>& profiles);

struct SplitResult {
    std::uint64_t prime = 2;
    unsigned exponent = 0;
    std::vector<SplittingPci> pcis;
    std::vector<AlgebraElement> collapsed;
};

Json split_json(const AbelianGroupSpec& spec, const SplitResult& result);
std::string split_text(const AbelianGroupSpec& spec, const SplitResult& result);

Json report_json(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

}  // namespace abelpci
