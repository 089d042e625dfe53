// Copyright 2026 The snacs-hi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snacs/cli.h"

#include <cctype>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "snacs/json_codec.h"
#include "snacs/service.h"
#include "text_util.h"

#ifndef SNACS_HI_DATA_DIR
#define SNACS_HI_DATA_DIR "data"
#endif

namespace snacs {

namespace {

struct Options {
  std::string data_dir = SNACS_HI_DATA_DIR;
  std::string hierarchy;
  std::string lexicon;
  std::string diagnostics;
  std::string exceptions;
  std::string corpus;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string file;
  std::string lemma;
  std::vector<std::string> words;
};

ToolkitPaths PathsFor(const Options &o, bool with_store) {
  ToolkitPaths p = ToolkitPaths::InDirectory(o.data_dir);
  if (!o.hierarchy.empty()) p.hierarchy = o.hierarchy;
  if (!o.lexicon.empty()) p.lexicon = o.lexicon;
  if (!o.diagnostics.empty()) p.diagnostics = o.diagnostics;
  if (!o.exceptions.empty()) p.translit_exceptions = o.exceptions;
  if (with_store && !o.corpus.empty()) p.corpus_dir = o.corpus;
  return p;
}

void PrintIssue(std::ostream &err, const ValidationIssue &i) {
  err << SeverityName(i.severity) << '\t' << i.code << '\t' << i.location
      << '\t' << i.message << '\n';
}

// Plain text input: one sentence per line, whitespace tokens, Devanagari
// romanized first. Corpus-format input keeps its own tokenization.
std::vector<Sentence> ReadSentences(const std::string &path,
                                    const Transliterator &translit) {
  std::string data = text::ReadFile(path);
  if (data.rfind("# newdoc", 0) == 0) {
    std::vector<Sentence> out;
    for (auto &d : ParseCorpus(data)) {
      for (auto &s : d.sentences) out.push_back(std::move(s));
    }
    return out;
  }
  std::vector<Sentence> out;
  std::size_t n = 0;
  for (const auto &line : text::SplitLines(data)) {
    ++n;
    std::string roman = translit.ToIast(line).text;
    Sentence s;
    s.source_id = "line" + std::to_string(n);
    for (auto &t : text::Split(roman, ' ')) {
      std::string tok(text::Trim(t));
      if (!tok.empty()) s.tokens.push_back(std::move(tok));
    }
    if (!s.tokens.empty()) out.push_back(std::move(s));
  }
  return out;
}

int Validate(const Options &o, std::ostream &out, std::ostream &err) {
  auto tk = Toolkit::Load(PathsFor(o, false));
  std::vector<Document> docs;
  try {
    docs = ParseCorpusFile(o.file);
  } catch (const LoadError &e) {
    err << "error\t" << e.code() << '\t' << o.file << ':' << e.line() << ':'
        << e.column() << '\t' << e.bare_message() << '\n';
    return kExitIssues;
  }
  std::size_t errors = 0, warnings = 0;
  for (const auto &d : docs) {
    for (const auto &i : tk->validator().ValidateDocument(d.records, d.sentences)) {
      PrintIssue(err, i);
      (i.severity == Severity::kError ? errors : warnings)++;
    }
  }
  out << docs.size() << " document(s), " << errors << " error(s), " << warnings
      << " warning(s)\n";
  return errors == 0 ? kExitClean : kExitIssues;
}

int Match(const Options &o, std::ostream &out) {
  auto tk = Toolkit::Load(PathsFor(o, false));
  for (const auto &s : ReadSentences(o.file, tk->transliterator())) {
    for (const auto &t : tk->matcher().FindTargets(s)) {
      std::vector<std::string> idx;
      for (auto i : t.token_indices) idx.push_back(std::to_string(i));
      out << s.source_id << '\t' << text::Join(idx, ",") << '\t' << t.lemma
          << '\t' << text::Join(t.surface, " ") << '\n';
    }
  }
  return kExitClean;
}

int Stats(const Options &o, std::ostream &out) {
  auto tk = Toolkit::Load(PathsFor(o, false));
  auto docs = ParseCorpusFile(o.file);
  out << ToJson(ComputeStats(docs, &tk->matcher())).dump(2) << '\n';
  return kExitClean;
}

int Lookup(const Options &o, std::ostream &out, std::ostream &err) {
  auto tk = Toolkit::Load(PathsFor(o, false));
  const LexEntry *e = tk->lexicon().Lookup(o.lemma);
  if (e == nullptr) {
    err << "unknown lemma: " << o.lemma << '\n';
    return kExitIssues;
  }
  out << "lemma\t" << e->lemma << '\n';
  out << "category\t" << CategoryName(e->category) << '\n';
  for (const auto &s : e->script_forms) out << "script\t" << s << '\n';
  if (e->register_pair) out << "register_pair\t" << *e->register_pair << '\n';
  for (const auto &v : e->variants) {
    out << "variant\t" << v.Pattern() << '\t' << VariantKindName(v.kind) << '\n';
  }
  for (const auto &l : e->licenses) {
    out << "license\t" << l.construal.ToString() << '\t' << l.anchor << '\t'
        << l.condition;
    if (l.open_scene) out << "\t[open scene]";
    if (l.provisional) out << "\t[provisional]";
    out << '\n';
  }
  return kExitClean;
}

int Translit(const Options &o, std::ostream &out, std::ostream &err) {
  Transliterator t;
  ToolkitPaths p = PathsFor(o, false);
  if (std::filesystem::exists(p.translit_exceptions)) {
    t = Transliterator::WithExceptionsFile(p.translit_exceptions);
  }
  auto r = t.ToIast(text::Join(o.words, " "));
  for (const auto &w : r.warnings) err << "warning\t" << w << '\n';
  out << r.text << '\n';
  return kExitClean;
}

int Serve(const Options &o, std::ostream &out, std::ostream &err) {
  auto tk = Toolkit::Load(PathsFor(o, true));
  Api api(*tk);
  HttpServer server(api);
  int port = server.Bind(o.host, o.port);
  if (port < 0) {
    err << "cannot bind " << o.host << ':' << o.port << '\n';
    return kExitFailure;
  }
  out << "listening on http://" << o.host << ':' << port << std::endl;
  return server.Listen() ? kExitClean : kExitFailure;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  Options o;
  CLI::App app{"Hindi adposition supersense toolkit", "snacs_hi"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--data-dir", o.data_dir, "Directory with the default data files")
      ->envname("SNACS_HI_DATA_DIR");
  app.add_option("--hierarchy", o.hierarchy, "Supersense hierarchy TSV")
      ->envname("SNACS_HI_HIERARCHY");
  app.add_option("--lexicon", o.lexicon, "Adposition lexicon TSV")
      ->envname("SNACS_HI_LEXICON");
  app.add_option("--diagnostics", o.diagnostics, "Diagnostic checklists JSON")
      ->envname("SNACS_HI_DIAGNOSTICS");
  app.add_option("--exceptions", o.exceptions, "Transliteration exceptions TSV")
      ->envname("SNACS_HI_EXCEPTIONS");

  auto *validate = app.add_subcommand("validate", "Validate an annotated corpus file");
  validate->add_option("file", o.file)->required();
  auto *match = app.add_subcommand("match", "List adposition targets in a file");
  match->add_option("file", o.file)->required();
  auto *stats = app.add_subcommand("stats", "Corpus statistics as JSON");
  stats->add_option("file", o.file)->required();
  auto *lookup = app.add_subcommand("lookup", "Show a lexicon entry");
  lookup->add_option("lemma", o.lemma)->required();
  auto *translit = app.add_subcommand("translit", "Romanize Devanagari text");
  translit->add_option("text", o.words)->required();
  auto *serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", o.port)->envname("SNACS_HI_PORT");
  serve->add_option("--host", o.host)->envname("SNACS_HI_HOST");
  serve->add_option("--corpus", o.corpus, "Document store directory")
      ->envname("SNACS_HI_CORPUS");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kExitClean;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kExitClean;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n' << app.help();
    return kExitFailure;
  }

  try {
    if (validate->parsed()) return Validate(o, out, err);
    if (match->parsed()) return Match(o, out);
    if (stats->parsed()) return Stats(o, out);
    if (lookup->parsed()) return Lookup(o, out, err);
    if (translit->parsed()) return Translit(o, out, err);
    if (serve->parsed()) return Serve(o, out, err);
  } catch (const LoadError &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << app.help();
  return kExitFailure;
}

}  // namespace snacs
