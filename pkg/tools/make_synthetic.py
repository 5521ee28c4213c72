#!/usr/bin/env python3
"""Regenerate the bundled synthetic assets under src/spellspot/data/.

Emits, deterministically (fixed seed):

* synthetic_spells.jsonl - a small invented spell lexicon
* synthetic_book_{1,2,3}.txt, synthetic_book_eval.txt - fake novels
* desk_vocab.txt         - frequency-built WordPiece vocabulary over the
                           fake novels, with the invented spell words
                           withheld so vocabulary-extension studies have
                           a controlled baseline
* english_words.txt      - baseline wordlist (common corpus words)
* character_names.txt    - invented character names (baseline extension)

The corpus is copyright-free stand-in text: plain everyday sentences
with occasional spell usage, quoting, abbreviations and questions so the
segmentation rules all get exercised.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from spellspot import spellbook, tokenizer

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "spellspot" / "data"
SEED = 20240601

NAMES = """
torvald elara brint mosk yanna olwenna grimshaw petra dorin sable
haldric merewen ansel corvina fenwick isolde ludmar nerissa otholin
quenby
""".split()

NOUNS = """
lantern tower bridge market cellar garden river sword cloak wagon
stable book candle mirror staff gate wall feather kettle barn orchard
harbor forest meadow bell library scroll chimney courtyard ladder
basket road fence window door wand charm spell hex curse jinx robe
tome anchor apron armchair attic banner barrel bench blanket boot
bottle bucket cabin carpet cart cauldron chair chest cliff coat
compass cottage cradle creek crow cupboard curtain dagger desk ditch
dove drum engine falcon ferry field fiddle fountain fox furnace
goblet granary grove hammer hatch hearth hedge helm hill hive hook
horn inn island jar jetty journal jug keep key kiln kite knot lake
lamp ledge letter locket loft loom mast mill mound oven paddock page
painting pantry parlor path pebble pier pillar pond porch pouch
quarry quill raft rake ridge ring roof rope saddle satchel shed
shelf ship shore shutter signpost sled sleeve smithy spade spire
spring stairs statue stream swamp table tapestry tent thicket
threshold tide trail trough trunk tunnel valley vane vault village
vine well wharf wheel windmill yard badger beacon bakery beehive
bellows birch blacksmith bobbin bonfire borough boulder brewery
brook bullock buoy buttress canal canopy caravan cedar chapel
charcoal cider cistern clover cobbler compost copse cornfield
crossing crumpet dairy damson dovecote dumpling elm ember estuary
fenland firewood flagon floorboard foothill footpath forge fortnight
gables gallery gangway gardener glade goshawk granite gristmill
gutter hamlet hawthorn hayloft haystack headland heather hedgerow
heron hillock hobnail homestead hosier huckster inkwell ironwork
juniper kestrel kindling kingfisher lichen limestone linen lintel
magpie mallet maple marsh mason millpond millstone moorland mortar
nettle oak oatcake orchardist osprey otter paddle parchment pasture
peat pheasant pickaxe pinewood plough plum porridge pottery pulley
quayside rafter reed rivet rookery rowboat rushes sawdust sawmill
scythe seedling shepherd shingle sickle skillet slate sluice
snowdrift sparrow spindle spruce steeple stonework stork sundial
tallow tankard tannery teapot thatch timber tinder turnip twine
vellum vestibule vicar waterwheel weathercock willow woodpile
woodshed wren
""".split()

VERBS = """
walked carried watched opened closed mended baked traded sailed
climbed whispered shouted cried muttered raised lowered studied
copied swept gathered rested waited laughed nodded followed crossed
painted counted stacked polished admired arranged bartered boarded
bolted borrowed bought braided brewed brushed built bundled burned
buried carved charted chased cleaned cleared cobbled collected
cooked corked crafted dangled delivered dug dried dusted emptied
fastened fed fetched filled fixed folded forged fried guarded
hauled heated hemmed herded hid hoisted hung hunted inked knitted
kneaded labeled lifted lit loaded locked mapped marked measured
milked mixed mopped moved nailed netted oiled packed patched peeled
piled pinned planted plowed plucked poured pressed pried pruned
pulled pushed raked repaired rinsed roasted rolled rowed sanded
sealed seasoned sewed sharpened sheared shelled shoveled sifted
signed sketched skimmed smoothed soaked sorted sowed spun steered
stitched stored strained stretched swabbed tarred tended threshed
tied tilled toasted towed trimmed tuned turned twisted unloaded
washed weeded wheeled wound wove wrapped ambled beckoned bickered
bustled chattered clambered dawdled dozed fumbled grumbled hobbled
hollered hurried idled jostled lingered loitered meandered mumbled
pondered pottered prowled rambled rummaged sauntered scurried
shuffled sidled skulked slumbered sneezed squinted strolled
stumbled tiptoed tottered trudged wandered wheezed yawned trotted
galloped paced roamed drifted glided hovered perched fluttered
""".split()

ADJECTIVES = """
old quiet narrow bright heavy small tall crooked dusty green pale
warm cold broken gentle steep wide silver wooden empty amber ancient
bitter blue brass brittle calm cheerful clumsy coarse copper cozy
creaky crimson curved damp deep dim dull faded faint fine firm flat
fragrant fresh frosty golden gray grim hollow humble icy ivory keen
large lean limp little lively lonely loose loud low mellow mild
misty modest mossy muddy murky musty neat pallid plain plump proud
quaint ragged rainy rough round rusty shady shallow sharp shiny
simple sleek slender slick slow smooth soft solemn sour sparse
speckled spare stale steady sticky stiff still stout strange strong
sturdy sunny sweet tame tattered thick thin tidy tired velvet vivid
weary wet windy worn airy bleak blunt bumpy chilly cloudy cramped
crisp curly dapper dented drab drafty earthen feeble flimsy foggy
frail gaunt gnarled grubby gusty hazy jagged knobbly lumpy matted
mottled parched patchy pebbled prickly rickety ruddy rumpled scuffed
slanted smoky snug soggy spindly springy squat sunlit threadbare
tangled uneven wobbly
""".split()

FILLER = """
the a and while when then but before after with at of on in her his
their near across beyond under toward slowly quickly again twice
always said was is did ever reach not no all day breath flick cast
struck light heard cry stood mr dr supper everyone practised
defensive charms spells faded could mend rang till dusk about over
stayed almost around behind between during each evening every few
from into it many morning most off once only other our several she
some soon still that they this those through together until upon
very we were where which who winter you your yet noon midday autumn
summer
""".split()

# invented incantations and names; invented words must stay out of the
# base vocabulary so extension studies have something to add
SPELLS = [
    ("incantation_with_name", "vexomorta", ["vexomorta curse"]),
    ("incantation_with_name", "karuzel vanto", ["drifting charm"]),
    ("incantation_with_name", "solmira velux", ["lantern charm"]),
    ("incantation_with_name", "ferroduil", ["iron hex"]),
    ("incantation_with_name", "nocturvel", ["veiling charm"]),
    ("incantation_only", "zimbrello", []),
    ("incantation_only", "okkarun", []),
    ("incantation_only", "fulminax", []),
    ("incantation_only", "drelvisto", []),
    ("incantation_only", "quellaron", []),
    ("incantation_only", "mistrevoko", []),
    ("name_only", None, ["glasswing charm"]),
    ("name_only", None, ["stone-bind curse"]),
    ("name_only", None, ["wandering jinx"]),
    ("name_only", None, ["whisper hex"]),
    ("action_as_spell", None,
     ["mindwalking", "mindwalk", "mindwalks", "mindwalked"]),
    ("action_as_spell", None,
     ["shadestepping", "shadestep", "shadesteps", "shadestepped"]),
]

EXCLUDED = ["defensive charms", "old spells"]

INVENTED_WORDS = {
    "vexomorta", "karuzel", "vanto", "solmira", "velux", "ferroduil",
    "nocturvel", "zimbrello", "okkarun", "fulminax", "drelvisto",
    "quellaron", "mistrevoko", "glasswing", "stone", "bind",
    "mindwalking", "mindwalk", "mindwalks", "mindwalked",
    "shadestepping", "shadestep", "shadesteps", "shadestepped",
}


def write_lexicon() -> spellbook.SpellLexicon:
    path = DATA_DIR / "synthetic_spells.jsonl"
    with open(path, "w", encoding="utf-8") as fh:
        for category, incantation, names in SPELLS:
            rec: dict = {"category": category}
            if incantation is not None:
                rec["incantation"] = incantation
            rec["names"] = names
            fh.write(json.dumps(rec) + "\n")
        for phrase in EXCLUDED:
            fh.write(json.dumps({"excluded": phrase}) + "\n")
    return spellbook.load_lexicon(path)


def negative_sentence(rng: random.Random) -> str:
    name = rng.choice(NAMES)
    noun, noun2 = rng.choice(NOUNS), rng.choice(NOUNS)
    verb, verb2 = rng.choice(VERBS), rng.choice(VERBS)
    adj, adj2 = rng.choice(ADJECTIVES), rng.choice(ADJECTIVES)
    forms = [
        f"the {adj} {noun} stood near the {noun2}.",
        f"{name} {verb} the {noun} and {verb2} toward the {noun2}.",
        f"mr. {name} {verb} the {noun} before supper.",
        f"dr. {name} {verb} the {adj} {noun} again.",
        f"did {name} ever reach the {noun}?",
        f"the {noun} was {adj}!",
        f'"the {noun} is {adj}," said {name}.',
        f"the old charm of the {noun} faded.",
        f"no spell could mend the {adj} {noun}.",
        f"{name} {verb} slowly across the {adj} {noun}.",
        f"they practised defensive charms all day.",
        f"the {noun} bell rang till dusk.",
        f"{name} and {rng.choice(NAMES)} {verb} about the {noun}.",
        f"(the {noun} stayed {adj}.)",
        f"every {noun} in the village was {adj2} that morning.",
        f"she {verb} the {adj} {noun} during the {adj2} evening.",
        f"{name} {verb} a {noun} from the {noun2} until noon.",
        f"those {adj} spells of winter {verb2} the {noun}.",
    ]
    return rng.choice(forms)


def positive_sentence(rng: random.Random, lexicon: spellbook.SpellLexicon) -> str:
    incantations = [e.incantation for e in lexicon.entries if e.incantation]
    names = [n for e in lexicon.entries
             if e.category in ("incantation_with_name", "name_only")
             for n in e.names]
    actions = [n for e in lexicon.entries
               if e.category == "action_as_spell" for n in e.names]
    name = rng.choice(NAMES)
    noun = rng.choice(NOUNS)
    adj = rng.choice(ADJECTIVES)
    inc = rng.choice(incantations)
    sname = rng.choice(names)
    action = rng.choice(actions)
    forms = [
        f'{name} raised the wand and shouted "{inc}!" at the {noun}.',
        f"{name} muttered {inc} under her breath.",
        f"with a flick {name} cast {inc} at the {noun}.",
        f"everyone heard {name} cry {inc} twice!",
        f'"{inc}!" cried {name}.',
        f"the {sname} struck the {noun} with a {adj} light.",
        f"{name} studied the {sname} all day.",
        f"then {name} {action} across the {noun}.",
        f'"{inc}," whispered {name}.',
    ]
    return rng.choice(forms)


def make_document(rng: random.Random, lexicon, paragraphs: int,
                  positive_rate: float) -> str:
    blocks = []
    for _ in range(paragraphs):
        sentences = []
        for _ in range(rng.randint(1, 4)):
            if rng.random() < positive_rate:
                sentences.append(positive_sentence(rng, lexicon))
            else:
                sentences.append(negative_sentence(rng))
        blocks.append(" ".join(sentences))
    return "\n\n".join(blocks) + "\n"


def main() -> None:
    rng = random.Random(SEED)
    lexicon = write_lexicon()

    docs = {
        "synthetic_book_1.txt": make_document(rng, lexicon, 260, 0.05),
        "synthetic_book_2.txt": make_document(rng, lexicon, 300, 0.05),
        "synthetic_book_3.txt": make_document(rng, lexicon, 240, 0.05),
        "synthetic_book_eval.txt": make_document(rng, lexicon, 220, 0.05),
    }
    for name, text in docs.items():
        (DATA_DIR / name).write_text(text, encoding="utf-8")

    train_texts = [docs[n] for n in
                   ("synthetic_book_1.txt", "synthetic_book_2.txt",
                    "synthetic_book_3.txt")]
    vocab = tokenizer.build_vocab(train_texts, size=8192,
                                  exclude=sorted(INVENTED_WORDS))
    tokenizer.save_vocab(vocab, DATA_DIR / "desk_vocab.txt")

    common_words = sorted(set(NOUNS + VERBS + ADJECTIVES + FILLER))
    (DATA_DIR / "english_words.txt").write_text(
        "\n".join(common_words) + "\n", encoding="utf-8")
    (DATA_DIR / "character_names.txt").write_text(
        "\n".join(sorted(NAMES)) + "\n", encoding="utf-8")

    print(f"vocab pieces: {len(vocab)}")
    for word in ("vexomorta", "zimbrello", "sectumsempra"):
        print(word, "->", tokenizer.tokenize_word(word, vocab))


if __name__ == "__main__":
    main()
