# Pinyin syllable -> IPA decomposition used to derive the shipped
# pinyin_ipa.tsv. Broad transcription: aspiration is the spacing modifier
# U+02B0, syllabic apical finals carry the combining ring U+0329, diphthongs
# use the same glide symbols as the ARPAbet table so that split-IPA configs
# actually share clusters across languages.

INITIALS = {
    "b": "p",
    "p": "pʰ",
    "m": "m",
    "f": "f",
    "d": "t",
    "t": "tʰ",
    "n": "n",
    "l": "l",
    "g": "k",
    "k": "kʰ",
    "h": "x",
    "j": "tɕ",
    "q": "tɕʰ",
    "x": "ɕ",
    "zh": "tʂ",
    "ch": "tʂʰ",
    "sh": "ʂ",
    "r": "ʐ",
    "z": "ts",
    "c": "tsʰ",
    "s": "s",
}

FINALS = {
    "a": "ɑ",
    "o": "o",
    "e": "ɤ",
    "i": "i",
    "u": "u",
    "v": "y",
    "ai": "aɪ",
    "ei": "eɪ",
    "ao": "aʊ",
    "ou": "oʊ",
    "an": "an",
    "en": "ən",
    "ang": "ɑŋ",
    "eng": "əŋ",
    "ong": "ʊŋ",
    "er": "əɻ",
    "ia": "jɑ",
    "ie": "je",
    "iao": "jaʊ",
    "iu": "joʊ",
    "ian": "jɛn",
    "in": "in",
    "iang": "jɑŋ",
    "ing": "iŋ",
    "iong": "jʊŋ",
    "ua": "wɑ",
    "uo": "wo",
    "uai": "waɪ",
    "ui": "weɪ",
    "uan": "wan",
    "un": "wən",
    "uang": "wɑŋ",
    "ueng": "wəŋ",
    "ve": "ɥe",
    "van": "ɥɛn",
    "vn": "yn",
}

# zh/ch/sh/r + "i" and z/c/s + "i" are apical syllabic consonants, not /i/.
APICAL_RETROFLEX = "ɻ̩"   # after zh ch sh r
APICAL_DENTAL = "ɹ̩"      # after z c s

# Zero-initial syllables written with y-/w- or standalone finals.
WHOLE_SYLLABLES = {
    "a": "ɑ",
    "o": "o",
    "e": "ɤ",
    "ai": "aɪ",
    "ei": "eɪ",
    "ao": "aʊ",
    "ou": "oʊ",
    "an": "an",
    "en": "ən",
    "ang": "ɑŋ",
    "eng": "əŋ",
    "er": "əɻ",
    "yi": "i",
    "ya": "jɑ",
    "ye": "je",
    "yao": "jaʊ",
    "you": "joʊ",
    "yan": "jɛn",
    "yin": "in",
    "yang": "jɑŋ",
    "ying": "iŋ",
    "yong": "jʊŋ",
    "yo": "jo",
    "wu": "u",
    "wa": "wɑ",
    "wo": "wo",
    "wai": "waɪ",
    "wei": "weɪ",
    "wan": "wan",
    "wen": "wən",
    "wang": "wɑŋ",
    "weng": "wəŋ",
    "yu": "y",
    "yue": "ɥe",
    "yuan": "ɥɛn",
    "yun": "yn",
    "ng": "ŋ̍",
}


def pinyin_base_to_ipa(base: str) -> str:
    """Derive the IPA string for one toneless pinyin syllable."""
    if base in WHOLE_SYLLABLES:
        return WHOLE_SYLLABLES[base]

    initial = ""
    for cand in ("zh", "ch", "sh"):
        if base.startswith(cand):
            initial = cand
            break
    else:
        if base and base[0] in INITIALS:
            initial = base[0]
    final = base[len(initial):]
    if not initial or not final:
        raise ValueError(f"cannot decompose pinyin syllable {base!r}")

    # Apical "i" after sibilant/retroflex series.
    if final == "i" and initial in ("zh", "ch", "sh", "r"):
        return INITIALS[initial] + APICAL_RETROFLEX
    if final == "i" and initial in ("z", "c", "s"):
        return INITIALS[initial] + APICAL_DENTAL

    # After j/q/x the written u/uan/un are the front-rounded v-series.
    if initial in ("j", "q", "x"):
        final = {"u": "v", "uan": "van", "un": "vn", "ue": "ve"}.get(final, final)
    if final in ("ue",):
        final = "ve"
    # "u" written after l/n with umlaut dropped stays /u/ here; lv/nv carry v.

    if final not in FINALS:
        raise ValueError(f"unknown final {final!r} in syllable {base!r}")
    return INITIALS[initial] + FINALS[final]
