#pragma once

namespace corpusqc::qualscan {

// The bundled rule set, in the same JSON format accepted from rule files.
inline constexpr const char* kBuiltinRules = R"json([
{
  "id": "unspecified-open-encoding",
  "category": "best-practice",
  "severity": "warning",
  "message": "open() in text mode without an explicit encoding; the platform default is used",
  "pattern": {"all": [
    "open(...)",
    {"not": "open(..., encoding=$E, ...)"},
    {"not": {"all": ["open($F, $M, ...)", {"where": "$M", "regex": "^\"[rwaxt+]*b[rwaxt+]*\"$"}]}},
    {"not": {"all": ["open(..., mode=$M, ...)", {"where": "$M", "regex": "^\"[rwaxt+]*b[rwaxt+]*\"$"}]}}
  ]}
},
{
  "id": "use-timeout",
  "category": "best-practice",
  "severity": "warning",
  "message": "requests.$M() without a timeout can hang forever",
  "pattern": {"all": [
    "requests.$M(...)",
    {"where": "$M", "regex": "^(get|post|put|patch|delete|head|options|request)$"},
    {"not": "requests.$M(..., timeout=$T, ...)"}
  ]}
},
{
  "id": "use-raise-for-status",
  "category": "best-practice",
  "severity": "warning",
  "message": "response $R is used without checking its status; call $R.raise_for_status()",
  "pattern": {"all": [
    "$R = requests.$M(...)",
    {"where": "$M", "regex": "^(get|post|put|patch|delete|head|options|request)$"},
    {"scope_lacks": "$R.raise_for_status()"},
    {"scope_lacks": "$R.status_code"},
    {"scope_lacks": "$R.ok"}
  ]}
},
{
  "id": "arbitrary-sleep",
  "category": "best-practice",
  "severity": "warning",
  "message": "fixed sleep of $N seconds; wait on the condition instead",
  "pattern": {"all": [
    "time.sleep($N)",
    {"where": "$N", "regex": "^[0-9][0-9_.]*([eE][-+]?[0-9]+)?$"}
  ]}
},
{
  "id": "open-never-closed",
  "category": "best-practice",
  "severity": "error",
  "message": "file object $F is opened but never closed; use a with block",
  "pattern": {"all": [
    "$F = open(...)",
    {"scope_lacks": "$F.close()"},
    {"scope_lacks": "return $F"},
    {"scope_lacks": "with $F:\n    ..."}
  ]}
},
{
  "id": "deserialize-untrusted",
  "category": "security",
  "severity": "warning",
  "cwe": "CWE-502",
  "message": "$MOD.$FN() can execute arbitrary code when fed untrusted data",
  "pattern": {"any": [
    {"all": [
      "$MOD.$FN(...)",
      {"where": "$MOD", "regex": "^(pickle|cPickle|_pickle|dill|marshal|shelve|jsonpickle)$"},
      {"where": "$FN", "regex": "^(load|loads|Unpickler|open|decode)$"}
    ]},
    {"all": [
      "yaml.$FN(...)",
      {"where": "$FN", "regex": "^(load|load_all|unsafe_load|unsafe_load_all|full_load)$"},
      {"not": {"all": ["yaml.$FN(..., Loader=$L, ...)", {"where": "$L", "regex": "Safe"}]}},
      {"not": {"all": ["yaml.$FN($S, $L)", {"where": "$L", "regex": "Safe"}]}}
    ]}
  ]}
},
{
  "id": "sql-injection",
  "category": "security",
  "severity": "error",
  "cwe": "CWE-89",
  "message": "SQL built with string formatting is passed to $EX(); use query parameters",
  "pattern": {"all": [
    {"any": [
      "$CUR.$EX(\"...\" % $X, ...)",
      "$CUR.$EX(\"...\".format(...), ...)",
      "$CUR.$EX(f\"...\", ...)",
      "$CUR.$EX(\"...\" + $X, ...)",
      "$CUR.$EX(\"...\" + $X + $Y, ...)",
      {"all": [
        "$CUR.$EX($Q, ...)",
        {"scope_has": {"any": [
          "$Q = \"...\" % $X",
          "$Q = \"...\".format(...)",
          "$Q = f\"...\"",
          "$Q = \"...\" + $X",
          "$Q = \"...\" + $X + $Y"
        ]}}
      ]}
    ]},
    {"where": "$EX", "regex": "^(execute|executemany|executescript)$"}
  ]}
},
{
  "id": "eval-injection",
  "category": "security",
  "severity": "warning",
  "cwe": "CWE-95",
  "message": "dynamic code evaluation of a non-literal expression",
  "pattern": {"any": [
    {"all": ["eval($X, ...)", {"not": "eval(\"...\", ...)"}]},
    {"all": ["exec($X, ...)", {"not": "exec(\"...\", ...)"}]}
  ]}
},
{
  "id": "os-command-injection",
  "category": "security",
  "severity": "error",
  "cwe": "CWE-78",
  "message": "shell command built at run time; pass an argument list without a shell",
  "pattern": {"any": [
    {"all": [
      "os.$FN($X, ...)",
      {"where": "$FN", "regex": "^(system|popen|popen2|popen3|popen4)$"},
      {"not": "os.$FN(\"...\", ...)"}
    ]},
    {"all": [
      "subprocess.$FN(..., shell=True, ...)",
      {"where": "$FN", "regex": "^(call|run|Popen|check_call|check_output)$"}
    ]},
    {"all": [
      "subprocess.$FN($X, ...)",
      {"where": "$FN", "regex": "^(getoutput|getstatusoutput)$"},
      {"not": "subprocess.$FN(\"...\", ...)"}
    ]}
  ]}
},
{
  "id": "insecure-hash",
  "category": "security",
  "severity": "warning",
  "cwe": "CWE-327",
  "message": "weak hash algorithm; use SHA256 or SHA3 instead",
  "pattern": {"any": [
    {"all": [
      "hashlib.$H(...)",
      {"where": "$H", "regex": "^(md5|sha1|md4)$"},
      {"not": "hashlib.$H(..., usedforsecurity=False, ...)"}
    ]},
    {"all": ["hashlib.new($A, ...)", {"where": "$A", "regex": "^\"(md5|sha1|md4)\"$", "ignore_case": true}]},
    {"all": ["$M.new(...)", {"where": "$M", "regex": "^(Crypto\\.Hash\\.)?(MD5|MD4|SHA|SHA1)$"}]}
  ]}
},
{
  "id": "function-reference-without-call",
  "category": "maintainability",
  "severity": "info",
  "message": "$O.$M is a method reference used as a value; it is always truthy",
  "pattern": {"all": [
    "$O.$M",
    {"where": "$M", "regex": "^(is|has|can|should)_[A-Za-z0-9_]+$"},
    {"inside": {"any": [
      "return $O.$M",
      "if $O.$M:\n    ...",
      "if not $O.$M:\n    ...",
      "while $O.$M:\n    ...",
      "while not $O.$M:\n    ...",
      "assert $O.$M"
    ]}}
  ]}
},
{
  "id": "identical-if-else-branches",
  "category": "maintainability",
  "severity": "warning",
  "message": "both branches of the conditional are identical",
  "pattern": "if $C:\n    $...B\nelse:\n    $...B"
},
{
  "id": "dead-code-after-return",
  "category": "maintainability",
  "severity": "info",
  "message": "statement after an unconditional jump is never executed",
  "pattern": {"any": [
    "return ...\n$S",
    "raise ...\n$S",
    "raise ... from ...\n$S",
    "continue\n$S",
    "break\n$S"
  ]}
},
{
  "id": "use-sys-exit",
  "category": "correctness",
  "severity": "warning",
  "message": "exit() and quit() are interactive helpers; use sys.exit()",
  "pattern": {"any": ["exit(...)", "quit(...)"]}
},
{
  "id": "string-identity-comparison",
  "category": "correctness",
  "severity": "error",
  "message": "string compared with 'is'; use '==' for value equality",
  "pattern": {"any": [
    "$X is \"...\"",
    "$X is not \"...\"",
    "\"...\" is $X",
    "\"...\" is not $X"
  ]}
},
{
  "id": "list-modify-while-iterate",
  "category": "correctness",
  "severity": "error",
  "message": "$L is modified while it is being iterated",
  "pattern": {"all": [
    "for $E in $L:\n    ...",
    {"contains": {"any": [
      {"all": ["$L.$M(...)", {"where": "$M", "regex": "^(append|extend|insert|remove|pop|clear)$"}]},
      "del $L[...]"
    ]}}
  ]}
},
{
  "id": "tempfile-without-flush",
  "category": "correctness",
  "severity": "error",
  "message": "$F.name is used before the written data is flushed",
  "pattern": {"all": [
    {"any": [
      "$F = tempfile.NamedTemporaryFile(...)",
      "$F = NamedTemporaryFile(...)",
      "with tempfile.NamedTemporaryFile(...) as $F:\n    ...",
      "with NamedTemporaryFile(...) as $F:\n    ..."
    ]},
    {"scope_has": "$F.write(...)"},
    {"scope_has": "$F.name"},
    {"scope_lacks": "$F.flush()"},
    {"scope_lacks": "$F.close()"}
  ]}
}
])json";

}  // namespace corpusqc::qualscan
