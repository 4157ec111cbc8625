#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace factcheck {

// Prompt templates for every model-facing stage. Built-in defaults can be
// overridden per template by dropping <name>.txt files into a directory.
//
// Placeholders are written {name} and spliced verbatim:
//   hyde                {claim}
//   summarize           {document}
//   question            {claim} {evidence}
//   answer              {claim} {question} {evidence}
//   verdict             {qa_block} {claim}
//   verdict_no_evidence {claim}
//   judge_decompose     {evidence}
//   judge_support       {evidence} {fact}
class PromptLibrary {
public:
    PromptLibrary(); // built-in defaults

    // Defaults plus overrides read from dir/<name>.txt. Unknown file names
    // are rejected so typos do not silently fall back to defaults.
    static PromptLibrary from_dir(const std::filesystem::path& dir);

    const std::string& get(const std::string& name) const; // throws ConfigError
    void set(const std::string& name, std::string text);

    static const std::vector<std::string>& names();

    // Replaces each {key} occurrence; unknown placeholders are left as-is.
    static std::string render(std::string_view tmpl,
                              const std::map<std::string, std::string>& values);

private:
    std::map<std::string, std::string> templates_;
};

} // namespace factcheck
