# Generated by tools/extract_unicode.py; do not edit.
UNICODE_VERSION = "14.0.0"

# code point -> (name, general category, combining class, canonical decomposition)
RECORDS = {
    0x0600: ('arabic number sign', 'Cf', 0, None),
    0x0601: ('arabic sign sanah', 'Cf', 0, None),
    0x0602: ('arabic footnote marker', 'Cf', 0, None),
    0x0603: ('arabic sign safha', 'Cf', 0, None),
    0x0604: ('arabic sign samvat', 'Cf', 0, None),
    0x0605: ('arabic number mark above', 'Cf', 0, None),
    0x0606: ('arabic-indic cube root', 'Sm', 0, None),
    0x0607: ('arabic-indic fourth root', 'Sm', 0, None),
    0x0608: ('arabic ray', 'Sm', 0, None),
    0x0609: ('arabic-indic per mille sign', 'Po', 0, None),
    0x060A: ('arabic-indic per ten thousand sign', 'Po', 0, None),
    0x060B: ('afghani sign', 'Sc', 0, None),
    0x060C: ('arabic comma', 'Po', 0, None),
    0x060D: ('arabic date separator', 'Po', 0, None),
    0x060E: ('arabic poetic verse sign', 'So', 0, None),
    0x060F: ('arabic sign misra', 'So', 0, None),
    0x0610: ('arabic sign sallallahou alayhe wassallam', 'Mn', 230, None),
    0x0611: ('arabic sign alayhe assallam', 'Mn', 230, None),
    0x0612: ('arabic sign rahmatullah alayhe', 'Mn', 230, None),
    0x0613: ('arabic sign radi allahou anhu', 'Mn', 230, None),
    0x0614: ('arabic sign takhallus', 'Mn', 230, None),
    0x0615: ('arabic small high tah', 'Mn', 230, None),
    0x0616: ('arabic small high ligature alef with lam with yeh', 'Mn', 230, None),
    0x0617: ('arabic small high zain', 'Mn', 230, None),
    0x0618: ('arabic small fatha', 'Mn', 30, None),
    0x0619: ('arabic small damma', 'Mn', 31, None),
    0x061A: ('arabic small kasra', 'Mn', 32, None),
    0x061B: ('arabic semicolon', 'Po', 0, None),
    0x061C: ('arabic letter mark', 'Cf', 0, None),
    0x061D: ('arabic end of text mark', 'Po', 0, None),
    0x061E: ('arabic triple dot punctuation mark', 'Po', 0, None),
    0x061F: ('arabic question mark', 'Po', 0, None),
    0x0620: ('arabic letter kashmiri yeh', 'Lo', 0, None),
    0x0621: ('arabic letter hamza', 'Lo', 0, None),
    0x0622: ('arabic letter alef with madda above', 'Lo', 0, (0x0627, 0x0653,)),
    0x0623: ('arabic letter alef with hamza above', 'Lo', 0, (0x0627, 0x0654,)),
    0x0624: ('arabic letter waw with hamza above', 'Lo', 0, (0x0648, 0x0654,)),
    0x0625: ('arabic letter alef with hamza below', 'Lo', 0, (0x0627, 0x0655,)),
    0x0626: ('arabic letter yeh with hamza above', 'Lo', 0, (0x064A, 0x0654,)),
    0x0627: ('arabic letter alef', 'Lo', 0, None),
    0x0628: ('arabic letter beh', 'Lo', 0, None),
    0x0629: ('arabic letter teh marbuta', 'Lo', 0, None),
    0x062A: ('arabic letter teh', 'Lo', 0, None),
    0x062B: ('arabic letter theh', 'Lo', 0, None),
    0x062C: ('arabic letter jeem', 'Lo', 0, None),
    0x062D: ('arabic letter hah', 'Lo', 0, None),
    0x062E: ('arabic letter khah', 'Lo', 0, None),
    0x062F: ('arabic letter dal', 'Lo', 0, None),
    0x0630: ('arabic letter thal', 'Lo', 0, None),
    0x0631: ('arabic letter reh', 'Lo', 0, None),
    0x0632: ('arabic letter zain', 'Lo', 0, None),
    0x0633: ('arabic letter seen', 'Lo', 0, None),
    0x0634: ('arabic letter sheen', 'Lo', 0, None),
    0x0635: ('arabic letter sad', 'Lo', 0, None),
    0x0636: ('arabic letter dad', 'Lo', 0, None),
    0x0637: ('arabic letter tah', 'Lo', 0, None),
    0x0638: ('arabic letter zah', 'Lo', 0, None),
    0x0639: ('arabic letter ain', 'Lo', 0, None),
    0x063A: ('arabic letter ghain', 'Lo', 0, None),
    0x063B: ('arabic letter keheh with two dots above', 'Lo', 0, None),
    0x063C: ('arabic letter keheh with three dots below', 'Lo', 0, None),
    0x063D: ('arabic letter farsi yeh with inverted v', 'Lo', 0, None),
    0x063E: ('arabic letter farsi yeh with two dots above', 'Lo', 0, None),
    0x063F: ('arabic letter farsi yeh with three dots above', 'Lo', 0, None),
    0x0640: ('arabic tatweel', 'Lm', 0, None),
    0x0641: ('arabic letter feh', 'Lo', 0, None),
    0x0642: ('arabic letter qaf', 'Lo', 0, None),
    0x0643: ('arabic letter kaf', 'Lo', 0, None),
    0x0644: ('arabic letter lam', 'Lo', 0, None),
    0x0645: ('arabic letter meem', 'Lo', 0, None),
    0x0646: ('arabic letter noon', 'Lo', 0, None),
    0x0647: ('arabic letter heh', 'Lo', 0, None),
    0x0648: ('arabic letter waw', 'Lo', 0, None),
    0x0649: ('arabic letter alef maksura', 'Lo', 0, None),
    0x064A: ('arabic letter yeh', 'Lo', 0, None),
    0x064B: ('arabic fathatan', 'Mn', 27, None),
    0x064C: ('arabic dammatan', 'Mn', 28, None),
    0x064D: ('arabic kasratan', 'Mn', 29, None),
    0x064E: ('arabic fatha', 'Mn', 30, None),
    0x064F: ('arabic damma', 'Mn', 31, None),
    0x0650: ('arabic kasra', 'Mn', 32, None),
    0x0651: ('arabic shadda', 'Mn', 33, None),
    0x0652: ('arabic sukun', 'Mn', 34, None),
    0x0653: ('arabic maddah above', 'Mn', 230, None),
    0x0654: ('arabic hamza above', 'Mn', 230, None),
    0x0655: ('arabic hamza below', 'Mn', 220, None),
    0x0656: ('arabic subscript alef', 'Mn', 220, None),
    0x0657: ('arabic inverted damma', 'Mn', 230, None),
    0x0658: ('arabic mark noon ghunna', 'Mn', 230, None),
    0x0659: ('arabic zwarakay', 'Mn', 230, None),
    0x065A: ('arabic vowel sign small v above', 'Mn', 230, None),
    0x065B: ('arabic vowel sign inverted small v above', 'Mn', 230, None),
    0x065C: ('arabic vowel sign dot below', 'Mn', 220, None),
    0x065D: ('arabic reversed damma', 'Mn', 230, None),
    0x065E: ('arabic fatha with two dots', 'Mn', 230, None),
    0x065F: ('arabic wavy hamza below', 'Mn', 220, None),
    0x0660: ('arabic-indic digit zero', 'Nd', 0, None),
    0x0661: ('arabic-indic digit one', 'Nd', 0, None),
    0x0662: ('arabic-indic digit two', 'Nd', 0, None),
    0x0663: ('arabic-indic digit three', 'Nd', 0, None),
    0x0664: ('arabic-indic digit four', 'Nd', 0, None),
    0x0665: ('arabic-indic digit five', 'Nd', 0, None),
    0x0666: ('arabic-indic digit six', 'Nd', 0, None),
    0x0667: ('arabic-indic digit seven', 'Nd', 0, None),
    0x0668: ('arabic-indic digit eight', 'Nd', 0, None),
    0x0669: ('arabic-indic digit nine', 'Nd', 0, None),
    0x066A: ('arabic percent sign', 'Po', 0, None),
    0x066B: ('arabic decimal separator', 'Po', 0, None),
    0x066C: ('arabic thousands separator', 'Po', 0, None),
    0x066D: ('arabic five pointed star', 'Po', 0, None),
    0x066E: ('arabic letter dotless beh', 'Lo', 0, None),
    0x066F: ('arabic letter dotless qaf', 'Lo', 0, None),
    0x0670: ('arabic letter superscript alef', 'Mn', 35, None),
    0x0671: ('arabic letter alef wasla', 'Lo', 0, None),
    0x0672: ('arabic letter alef with wavy hamza above', 'Lo', 0, None),
    0x0673: ('arabic letter alef with wavy hamza below', 'Lo', 0, None),
    0x0674: ('arabic letter high hamza', 'Lo', 0, None),
    0x0675: ('arabic letter high hamza alef', 'Lo', 0, None),
    0x0676: ('arabic letter high hamza waw', 'Lo', 0, None),
    0x0677: ('arabic letter u with hamza above', 'Lo', 0, None),
    0x0678: ('arabic letter high hamza yeh', 'Lo', 0, None),
    0x0679: ('arabic letter tteh', 'Lo', 0, None),
    0x067A: ('arabic letter tteheh', 'Lo', 0, None),
    0x067B: ('arabic letter beeh', 'Lo', 0, None),
    0x067C: ('arabic letter teh with ring', 'Lo', 0, None),
    0x067D: ('arabic letter teh with three dots above downwards', 'Lo', 0, None),
    0x067E: ('arabic letter peh', 'Lo', 0, None),
    0x067F: ('arabic letter teheh', 'Lo', 0, None),
    0x0680: ('arabic letter beheh', 'Lo', 0, None),
    0x0681: ('arabic letter hah with hamza above', 'Lo', 0, None),
    0x0682: ('arabic letter hah with two dots vertical above', 'Lo', 0, None),
    0x0683: ('arabic letter nyeh', 'Lo', 0, None),
    0x0684: ('arabic letter dyeh', 'Lo', 0, None),
    0x0685: ('arabic letter hah with three dots above', 'Lo', 0, None),
    0x0686: ('arabic letter tcheh', 'Lo', 0, None),
    0x0687: ('arabic letter tcheheh', 'Lo', 0, None),
    0x0688: ('arabic letter ddal', 'Lo', 0, None),
    0x0689: ('arabic letter dal with ring', 'Lo', 0, None),
    0x068A: ('arabic letter dal with dot below', 'Lo', 0, None),
    0x068B: ('arabic letter dal with dot below and small tah', 'Lo', 0, None),
    0x068C: ('arabic letter dahal', 'Lo', 0, None),
    0x068D: ('arabic letter ddahal', 'Lo', 0, None),
    0x068E: ('arabic letter dul', 'Lo', 0, None),
    0x068F: ('arabic letter dal with three dots above downwards', 'Lo', 0, None),
    0x0690: ('arabic letter dal with four dots above', 'Lo', 0, None),
    0x0691: ('arabic letter rreh', 'Lo', 0, None),
    0x0692: ('arabic letter reh with small v', 'Lo', 0, None),
    0x0693: ('arabic letter reh with ring', 'Lo', 0, None),
    0x0694: ('arabic letter reh with dot below', 'Lo', 0, None),
    0x0695: ('arabic letter reh with small v below', 'Lo', 0, None),
    0x0696: ('arabic letter reh with dot below and dot above', 'Lo', 0, None),
    0x0697: ('arabic letter reh with two dots above', 'Lo', 0, None),
    0x0698: ('arabic letter jeh', 'Lo', 0, None),
    0x0699: ('arabic letter reh with four dots above', 'Lo', 0, None),
    0x069A: ('arabic letter seen with dot below and dot above', 'Lo', 0, None),
    0x069B: ('arabic letter seen with three dots below', 'Lo', 0, None),
    0x069C: ('arabic letter seen with three dots below and three dots above', 'Lo', 0, None),
    0x069D: ('arabic letter sad with two dots below', 'Lo', 0, None),
    0x069E: ('arabic letter sad with three dots above', 'Lo', 0, None),
    0x069F: ('arabic letter tah with three dots above', 'Lo', 0, None),
    0x06A0: ('arabic letter ain with three dots above', 'Lo', 0, None),
    0x06A1: ('arabic letter dotless feh', 'Lo', 0, None),
    0x06A2: ('arabic letter feh with dot moved below', 'Lo', 0, None),
    0x06A3: ('arabic letter feh with dot below', 'Lo', 0, None),
    0x06A4: ('arabic letter veh', 'Lo', 0, None),
    0x06A5: ('arabic letter feh with three dots below', 'Lo', 0, None),
    0x06A6: ('arabic letter peheh', 'Lo', 0, None),
    0x06A7: ('arabic letter qaf with dot above', 'Lo', 0, None),
    0x06A8: ('arabic letter qaf with three dots above', 'Lo', 0, None),
    0x06A9: ('arabic letter keheh', 'Lo', 0, None),
    0x06AA: ('arabic letter swash kaf', 'Lo', 0, None),
    0x06AB: ('arabic letter kaf with ring', 'Lo', 0, None),
    0x06AC: ('arabic letter kaf with dot above', 'Lo', 0, None),
    0x06AD: ('arabic letter ng', 'Lo', 0, None),
    0x06AE: ('arabic letter kaf with three dots below', 'Lo', 0, None),
    0x06AF: ('arabic letter gaf', 'Lo', 0, None),
    0x06B0: ('arabic letter gaf with ring', 'Lo', 0, None),
    0x06B1: ('arabic letter ngoeh', 'Lo', 0, None),
    0x06B2: ('arabic letter gaf with two dots below', 'Lo', 0, None),
    0x06B3: ('arabic letter gueh', 'Lo', 0, None),
    0x06B4: ('arabic letter gaf with three dots above', 'Lo', 0, None),
    0x06B5: ('arabic letter lam with small v', 'Lo', 0, None),
    0x06B6: ('arabic letter lam with dot above', 'Lo', 0, None),
    0x06B7: ('arabic letter lam with three dots above', 'Lo', 0, None),
    0x06B8: ('arabic letter lam with three dots below', 'Lo', 0, None),
    0x06B9: ('arabic letter noon with dot below', 'Lo', 0, None),
    0x06BA: ('arabic letter noon ghunna', 'Lo', 0, None),
    0x06BB: ('arabic letter rnoon', 'Lo', 0, None),
    0x06BC: ('arabic letter noon with ring', 'Lo', 0, None),
    0x06BD: ('arabic letter noon with three dots above', 'Lo', 0, None),
    0x06BE: ('arabic letter heh doachashmee', 'Lo', 0, None),
    0x06BF: ('arabic letter tcheh with dot above', 'Lo', 0, None),
    0x06C0: ('arabic letter heh with yeh above', 'Lo', 0, (0x06D5, 0x0654,)),
    0x06C1: ('arabic letter heh goal', 'Lo', 0, None),
    0x06C2: ('arabic letter heh goal with hamza above', 'Lo', 0, (0x06C1, 0x0654,)),
    0x06C3: ('arabic letter teh marbuta goal', 'Lo', 0, None),
    0x06C4: ('arabic letter waw with ring', 'Lo', 0, None),
    0x06C5: ('arabic letter kirghiz oe', 'Lo', 0, None),
    0x06C6: ('arabic letter oe', 'Lo', 0, None),
    0x06C7: ('arabic letter u', 'Lo', 0, None),
    0x06C8: ('arabic letter yu', 'Lo', 0, None),
    0x06C9: ('arabic letter kirghiz yu', 'Lo', 0, None),
    0x06CA: ('arabic letter waw with two dots above', 'Lo', 0, None),
    0x06CB: ('arabic letter ve', 'Lo', 0, None),
    0x06CC: ('arabic letter farsi yeh', 'Lo', 0, None),
    0x06CD: ('arabic letter yeh with tail', 'Lo', 0, None),
    0x06CE: ('arabic letter yeh with small v', 'Lo', 0, None),
    0x06CF: ('arabic letter waw with dot above', 'Lo', 0, None),
    0x06D0: ('arabic letter e', 'Lo', 0, None),
    0x06D1: ('arabic letter yeh with three dots below', 'Lo', 0, None),
    0x06D2: ('arabic letter yeh barree', 'Lo', 0, None),
    0x06D3: ('arabic letter yeh barree with hamza above', 'Lo', 0, (0x06D2, 0x0654,)),
    0x06D4: ('arabic full stop', 'Po', 0, None),
    0x06D5: ('arabic letter ae', 'Lo', 0, None),
    0x06D6: ('arabic small high ligature sad with lam with alef maksura', 'Mn', 230, None),
    0x06D7: ('arabic small high ligature qaf with lam with alef maksura', 'Mn', 230, None),
    0x06D8: ('arabic small high meem initial form', 'Mn', 230, None),
    0x06D9: ('arabic small high lam alef', 'Mn', 230, None),
    0x06DA: ('arabic small high jeem', 'Mn', 230, None),
    0x06DB: ('arabic small high three dots', 'Mn', 230, None),
    0x06DC: ('arabic small high seen', 'Mn', 230, None),
    0x06DD: ('arabic end of ayah', 'Cf', 0, None),
    0x06DE: ('arabic start of rub el hizb', 'So', 0, None),
    0x06DF: ('arabic small high rounded zero', 'Mn', 230, None),
    0x06E0: ('arabic small high upright rectangular zero', 'Mn', 230, None),
    0x06E1: ('arabic small high dotless head of khah', 'Mn', 230, None),
    0x06E2: ('arabic small high meem isolated form', 'Mn', 230, None),
    0x06E3: ('arabic small low seen', 'Mn', 220, None),
    0x06E4: ('arabic small high madda', 'Mn', 230, None),
    0x06E5: ('arabic small waw', 'Lm', 0, None),
    0x06E6: ('arabic small yeh', 'Lm', 0, None),
    0x06E7: ('arabic small high yeh', 'Mn', 230, None),
    0x06E8: ('arabic small high noon', 'Mn', 230, None),
    0x06E9: ('arabic place of sajdah', 'So', 0, None),
    0x06EA: ('arabic empty centre low stop', 'Mn', 220, None),
    0x06EB: ('arabic empty centre high stop', 'Mn', 230, None),
    0x06EC: ('arabic rounded high stop with filled centre', 'Mn', 230, None),
    0x06ED: ('arabic small low meem', 'Mn', 220, None),
    0x06EE: ('arabic letter dal with inverted v', 'Lo', 0, None),
    0x06EF: ('arabic letter reh with inverted v', 'Lo', 0, None),
    0x06F0: ('extended arabic-indic digit zero', 'Nd', 0, None),
    0x06F1: ('extended arabic-indic digit one', 'Nd', 0, None),
    0x06F2: ('extended arabic-indic digit two', 'Nd', 0, None),
    0x06F3: ('extended arabic-indic digit three', 'Nd', 0, None),
    0x06F4: ('extended arabic-indic digit four', 'Nd', 0, None),
    0x06F5: ('extended arabic-indic digit five', 'Nd', 0, None),
    0x06F6: ('extended arabic-indic digit six', 'Nd', 0, None),
    0x06F7: ('extended arabic-indic digit seven', 'Nd', 0, None),
    0x06F8: ('extended arabic-indic digit eight', 'Nd', 0, None),
    0x06F9: ('extended arabic-indic digit nine', 'Nd', 0, None),
    0x06FA: ('arabic letter sheen with dot below', 'Lo', 0, None),
    0x06FB: ('arabic letter dad with dot below', 'Lo', 0, None),
    0x06FC: ('arabic letter ghain with dot below', 'Lo', 0, None),
    0x06FD: ('arabic sign sindhi ampersand', 'So', 0, None),
    0x06FE: ('arabic sign sindhi postposition men', 'So', 0, None),
    0x06FF: ('arabic letter heh with inverted v', 'Lo', 0, None),
    0x0750: ('arabic letter beh with three dots horizontally below', 'Lo', 0, None),
    0x0751: ('arabic letter beh with dot below and three dots above', 'Lo', 0, None),
    0x0752: ('arabic letter beh with three dots pointing upwards below', 'Lo', 0, None),
    0x0753: ('arabic letter beh with three dots pointing upwards below and two dots above', 'Lo', 0, None),
    0x0754: ('arabic letter beh with two dots below and dot above', 'Lo', 0, None),
    0x0755: ('arabic letter beh with inverted small v below', 'Lo', 0, None),
    0x0756: ('arabic letter beh with small v', 'Lo', 0, None),
    0x0757: ('arabic letter hah with two dots above', 'Lo', 0, None),
    0x0758: ('arabic letter hah with three dots pointing upwards below', 'Lo', 0, None),
    0x0759: ('arabic letter dal with two dots vertically below and small tah', 'Lo', 0, None),
    0x075A: ('arabic letter dal with inverted small v below', 'Lo', 0, None),
    0x075B: ('arabic letter reh with stroke', 'Lo', 0, None),
    0x075C: ('arabic letter seen with four dots above', 'Lo', 0, None),
    0x075D: ('arabic letter ain with two dots above', 'Lo', 0, None),
    0x075E: ('arabic letter ain with three dots pointing downwards above', 'Lo', 0, None),
    0x075F: ('arabic letter ain with two dots vertically above', 'Lo', 0, None),
    0x0760: ('arabic letter feh with two dots below', 'Lo', 0, None),
    0x0761: ('arabic letter feh with three dots pointing upwards below', 'Lo', 0, None),
    0x0762: ('arabic letter keheh with dot above', 'Lo', 0, None),
    0x0763: ('arabic letter keheh with three dots above', 'Lo', 0, None),
    0x0764: ('arabic letter keheh with three dots pointing upwards below', 'Lo', 0, None),
    0x0765: ('arabic letter meem with dot above', 'Lo', 0, None),
    0x0766: ('arabic letter meem with dot below', 'Lo', 0, None),
    0x0767: ('arabic letter noon with two dots below', 'Lo', 0, None),
    0x0768: ('arabic letter noon with small tah', 'Lo', 0, None),
    0x0769: ('arabic letter noon with small v', 'Lo', 0, None),
    0x076A: ('arabic letter lam with bar', 'Lo', 0, None),
    0x076B: ('arabic letter reh with two dots vertically above', 'Lo', 0, None),
    0x076C: ('arabic letter reh with hamza above', 'Lo', 0, None),
    0x076D: ('arabic letter seen with two dots vertically above', 'Lo', 0, None),
    0x076E: ('arabic letter hah with small arabic letter tah below', 'Lo', 0, None),
    0x076F: ('arabic letter hah with small arabic letter tah and two dots', 'Lo', 0, None),
    0x0770: ('arabic letter seen with small arabic letter tah and two dots', 'Lo', 0, None),
    0x0771: ('arabic letter reh with small arabic letter tah and two dots', 'Lo', 0, None),
    0x0772: ('arabic letter hah with small arabic letter tah above', 'Lo', 0, None),
    0x0773: ('arabic letter alef with extended arabic-indic digit two above', 'Lo', 0, None),
    0x0774: ('arabic letter alef with extended arabic-indic digit three above', 'Lo', 0, None),
    0x0775: ('arabic letter farsi yeh with extended arabic-indic digit two above', 'Lo', 0, None),
    0x0776: ('arabic letter farsi yeh with extended arabic-indic digit three above', 'Lo', 0, None),
    0x0777: ('arabic letter farsi yeh with extended arabic-indic digit four below', 'Lo', 0, None),
    0x0778: ('arabic letter waw with extended arabic-indic digit two above', 'Lo', 0, None),
    0x0779: ('arabic letter waw with extended arabic-indic digit three above', 'Lo', 0, None),
    0x077A: ('arabic letter yeh barree with extended arabic-indic digit two above', 'Lo', 0, None),
    0x077B: ('arabic letter yeh barree with extended arabic-indic digit three above', 'Lo', 0, None),
    0x077C: ('arabic letter hah with extended arabic-indic digit four below', 'Lo', 0, None),
    0x077D: ('arabic letter seen with extended arabic-indic digit four above', 'Lo', 0, None),
    0x077E: ('arabic letter seen with inverted v', 'Lo', 0, None),
    0x077F: ('arabic letter kaf with two dots above', 'Lo', 0, None),
    0x0870: ('arabic letter alef with attached fatha', 'Lo', 0, None),
    0x0871: ('arabic letter alef with attached top right fatha', 'Lo', 0, None),
    0x0872: ('arabic letter alef with right middle stroke', 'Lo', 0, None),
    0x0873: ('arabic letter alef with left middle stroke', 'Lo', 0, None),
    0x0874: ('arabic letter alef with attached kasra', 'Lo', 0, None),
    0x0875: ('arabic letter alef with attached bottom right kasra', 'Lo', 0, None),
    0x0876: ('arabic letter alef with attached round dot above', 'Lo', 0, None),
    0x0877: ('arabic letter alef with attached right round dot', 'Lo', 0, None),
    0x0878: ('arabic letter alef with attached left round dot', 'Lo', 0, None),
    0x0879: ('arabic letter alef with attached round dot below', 'Lo', 0, None),
    0x087A: ('arabic letter alef with dot above', 'Lo', 0, None),
    0x087B: ('arabic letter alef with attached top right fatha and dot above', 'Lo', 0, None),
    0x087C: ('arabic letter alef with right middle stroke and dot above', 'Lo', 0, None),
    0x087D: ('arabic letter alef with attached bottom right kasra and dot above', 'Lo', 0, None),
    0x087E: ('arabic letter alef with attached top right fatha and left ring', 'Lo', 0, None),
    0x087F: ('arabic letter alef with right middle stroke and left ring', 'Lo', 0, None),
    0x0880: ('arabic letter alef with attached bottom right kasra and left ring', 'Lo', 0, None),
    0x0881: ('arabic letter alef with attached right hamza', 'Lo', 0, None),
    0x0882: ('arabic letter alef with attached left hamza', 'Lo', 0, None),
    0x0883: ('arabic tatweel with overstruck hamza', 'Lo', 0, None),
    0x0884: ('arabic tatweel with overstruck waw', 'Lo', 0, None),
    0x0885: ('arabic tatweel with two dots below', 'Lo', 0, None),
    0x0886: ('arabic letter thin yeh', 'Lo', 0, None),
    0x0887: ('arabic baseline round dot', 'Lo', 0, None),
    0x0888: ('arabic raised round dot', 'Sk', 0, None),
    0x0889: ('arabic letter noon with inverted small v', 'Lo', 0, None),
    0x088A: ('arabic letter hah with inverted small v below', 'Lo', 0, None),
    0x088B: ('arabic letter tah with dot below', 'Lo', 0, None),
    0x088C: ('arabic letter tah with three dots below', 'Lo', 0, None),
    0x088D: ('arabic letter keheh with two dots vertically below', 'Lo', 0, None),
    0x088E: ('arabic vertical tail', 'Lo', 0, None),
    0x0890: ('arabic pound mark above', 'Cf', 0, None),
    0x0891: ('arabic piastre mark above', 'Cf', 0, None),
    0x0898: ('arabic small high word al-juz', 'Mn', 230, None),
    0x0899: ('arabic small low word ishmaam', 'Mn', 220, None),
    0x089A: ('arabic small low word imaala', 'Mn', 220, None),
    0x089B: ('arabic small low word tasheel', 'Mn', 220, None),
    0x089C: ('arabic madda waajib', 'Mn', 230, None),
    0x089D: ('arabic superscript alef mokhassas', 'Mn', 230, None),
    0x089E: ('arabic doubled madda', 'Mn', 230, None),
    0x089F: ('arabic half madda over madda', 'Mn', 230, None),
    0x08A0: ('arabic letter beh with small v below', 'Lo', 0, None),
    0x08A1: ('arabic letter beh with hamza above', 'Lo', 0, None),
    0x08A2: ('arabic letter jeem with two dots above', 'Lo', 0, None),
    0x08A3: ('arabic letter tah with two dots above', 'Lo', 0, None),
    0x08A4: ('arabic letter feh with dot below and three dots above', 'Lo', 0, None),
    0x08A5: ('arabic letter qaf with dot below', 'Lo', 0, None),
    0x08A6: ('arabic letter lam with double bar', 'Lo', 0, None),
    0x08A7: ('arabic letter meem with three dots above', 'Lo', 0, None),
    0x08A8: ('arabic letter yeh with two dots below and hamza above', 'Lo', 0, None),
    0x08A9: ('arabic letter yeh with two dots below and dot above', 'Lo', 0, None),
    0x08AA: ('arabic letter reh with loop', 'Lo', 0, None),
    0x08AB: ('arabic letter waw with dot within', 'Lo', 0, None),
    0x08AC: ('arabic letter rohingya yeh', 'Lo', 0, None),
    0x08AD: ('arabic letter low alef', 'Lo', 0, None),
    0x08AE: ('arabic letter dal with three dots below', 'Lo', 0, None),
    0x08AF: ('arabic letter sad with three dots below', 'Lo', 0, None),
    0x08B0: ('arabic letter gaf with inverted stroke', 'Lo', 0, None),
    0x08B1: ('arabic letter straight waw', 'Lo', 0, None),
    0x08B2: ('arabic letter zain with inverted v above', 'Lo', 0, None),
    0x08B3: ('arabic letter ain with three dots below', 'Lo', 0, None),
    0x08B4: ('arabic letter kaf with dot below', 'Lo', 0, None),
    0x08B5: ('arabic letter qaf with dot below and no dots above', 'Lo', 0, None),
    0x08B6: ('arabic letter beh with small meem above', 'Lo', 0, None),
    0x08B7: ('arabic letter peh with small meem above', 'Lo', 0, None),
    0x08B8: ('arabic letter teh with small teh above', 'Lo', 0, None),
    0x08B9: ('arabic letter reh with small noon above', 'Lo', 0, None),
    0x08BA: ('arabic letter yeh with two dots below and small noon above', 'Lo', 0, None),
    0x08BB: ('arabic letter african feh', 'Lo', 0, None),
    0x08BC: ('arabic letter african qaf', 'Lo', 0, None),
    0x08BD: ('arabic letter african noon', 'Lo', 0, None),
    0x08BE: ('arabic letter peh with small v', 'Lo', 0, None),
    0x08BF: ('arabic letter teh with small v', 'Lo', 0, None),
    0x08C0: ('arabic letter tteh with small v', 'Lo', 0, None),
    0x08C1: ('arabic letter tcheh with small v', 'Lo', 0, None),
    0x08C2: ('arabic letter keheh with small v', 'Lo', 0, None),
    0x08C3: ('arabic letter ghain with three dots above', 'Lo', 0, None),
    0x08C4: ('arabic letter african qaf with three dots above', 'Lo', 0, None),
    0x08C5: ('arabic letter jeem with three dots above', 'Lo', 0, None),
    0x08C6: ('arabic letter jeem with three dots below', 'Lo', 0, None),
    0x08C7: ('arabic letter lam with small arabic letter tah above', 'Lo', 0, None),
    0x08C8: ('arabic letter graf', 'Lo', 0, None),
    0x08C9: ('arabic small farsi yeh', 'Lm', 0, None),
    0x08CA: ('arabic small high farsi yeh', 'Mn', 230, None),
    0x08CB: ('arabic small high yeh barree with two dots below', 'Mn', 230, None),
    0x08CC: ('arabic small high word sah', 'Mn', 230, None),
    0x08CD: ('arabic small high zah', 'Mn', 230, None),
    0x08CE: ('arabic large round dot above', 'Mn', 230, None),
    0x08CF: ('arabic large round dot below', 'Mn', 220, None),
    0x08D0: ('arabic sukun below', 'Mn', 220, None),
    0x08D1: ('arabic large circle below', 'Mn', 220, None),
    0x08D2: ('arabic large round dot inside circle below', 'Mn', 220, None),
    0x08D3: ('arabic small low waw', 'Mn', 220, None),
    0x08D4: ('arabic small high word ar-rub', 'Mn', 230, None),
    0x08D5: ('arabic small high sad', 'Mn', 230, None),
    0x08D6: ('arabic small high ain', 'Mn', 230, None),
    0x08D7: ('arabic small high qaf', 'Mn', 230, None),
    0x08D8: ('arabic small high noon with kasra', 'Mn', 230, None),
    0x08D9: ('arabic small low noon with kasra', 'Mn', 230, None),
    0x08DA: ('arabic small high word ath-thalatha', 'Mn', 230, None),
    0x08DB: ('arabic small high word as-sajda', 'Mn', 230, None),
    0x08DC: ('arabic small high word an-nisf', 'Mn', 230, None),
    0x08DD: ('arabic small high word sakta', 'Mn', 230, None),
    0x08DE: ('arabic small high word qif', 'Mn', 230, None),
    0x08DF: ('arabic small high word waqfa', 'Mn', 230, None),
    0x08E0: ('arabic small high footnote marker', 'Mn', 230, None),
    0x08E1: ('arabic small high sign safha', 'Mn', 230, None),
    0x08E2: ('arabic disputed end of ayah', 'Cf', 0, None),
    0x08E3: ('arabic turned damma below', 'Mn', 220, None),
    0x08E4: ('arabic curly fatha', 'Mn', 230, None),
    0x08E5: ('arabic curly damma', 'Mn', 230, None),
    0x08E6: ('arabic curly kasra', 'Mn', 220, None),
    0x08E7: ('arabic curly fathatan', 'Mn', 230, None),
    0x08E8: ('arabic curly dammatan', 'Mn', 230, None),
    0x08E9: ('arabic curly kasratan', 'Mn', 220, None),
    0x08EA: ('arabic tone one dot above', 'Mn', 230, None),
    0x08EB: ('arabic tone two dots above', 'Mn', 230, None),
    0x08EC: ('arabic tone loop above', 'Mn', 230, None),
    0x08ED: ('arabic tone one dot below', 'Mn', 220, None),
    0x08EE: ('arabic tone two dots below', 'Mn', 220, None),
    0x08EF: ('arabic tone loop below', 'Mn', 220, None),
    0x08F0: ('arabic open fathatan', 'Mn', 27, None),
    0x08F1: ('arabic open dammatan', 'Mn', 28, None),
    0x08F2: ('arabic open kasratan', 'Mn', 29, None),
    0x08F3: ('arabic small high waw', 'Mn', 230, None),
    0x08F4: ('arabic fatha with ring', 'Mn', 230, None),
    0x08F5: ('arabic fatha with dot above', 'Mn', 230, None),
    0x08F6: ('arabic kasra with dot below', 'Mn', 220, None),
    0x08F7: ('arabic left arrowhead above', 'Mn', 230, None),
    0x08F8: ('arabic right arrowhead above', 'Mn', 230, None),
    0x08F9: ('arabic left arrowhead below', 'Mn', 220, None),
    0x08FA: ('arabic right arrowhead below', 'Mn', 220, None),
    0x08FB: ('arabic double right arrowhead above', 'Mn', 230, None),
    0x08FC: ('arabic double right arrowhead above with dot', 'Mn', 230, None),
    0x08FD: ('arabic right arrowhead above with dot', 'Mn', 230, None),
    0x08FE: ('arabic damma with dot', 'Mn', 230, None),
    0x08FF: ('arabic mark sideways noon ghunna', 'Mn', 230, None),
    0xFB50: ('arabic letter alef wasla isolated form', 'Lo', 0, None),
    0xFB51: ('arabic letter alef wasla final form', 'Lo', 0, None),
    0xFB52: ('arabic letter beeh isolated form', 'Lo', 0, None),
    0xFB53: ('arabic letter beeh final form', 'Lo', 0, None),
    0xFB54: ('arabic letter beeh initial form', 'Lo', 0, None),
    0xFB55: ('arabic letter beeh medial form', 'Lo', 0, None),
    0xFB56: ('arabic letter peh isolated form', 'Lo', 0, None),
    0xFB57: ('arabic letter peh final form', 'Lo', 0, None),
    0xFB58: ('arabic letter peh initial form', 'Lo', 0, None),
    0xFB59: ('arabic letter peh medial form', 'Lo', 0, None),
    0xFB5A: ('arabic letter beheh isolated form', 'Lo', 0, None),
    0xFB5B: ('arabic letter beheh final form', 'Lo', 0, None),
    0xFB5C: ('arabic letter beheh initial form', 'Lo', 0, None),
    0xFB5D: ('arabic letter beheh medial form', 'Lo', 0, None),
    0xFB5E: ('arabic letter tteheh isolated form', 'Lo', 0, None),
    0xFB5F: ('arabic letter tteheh final form', 'Lo', 0, None),
    0xFB60: ('arabic letter tteheh initial form', 'Lo', 0, None),
    0xFB61: ('arabic letter tteheh medial form', 'Lo', 0, None),
    0xFB62: ('arabic letter teheh isolated form', 'Lo', 0, None),
    0xFB63: ('arabic letter teheh final form', 'Lo', 0, None),
    0xFB64: ('arabic letter teheh initial form', 'Lo', 0, None),
    0xFB65: ('arabic letter teheh medial form', 'Lo', 0, None),
    0xFB66: ('arabic letter tteh isolated form', 'Lo', 0, None),
    0xFB67: ('arabic letter tteh final form', 'Lo', 0, None),
    0xFB68: ('arabic letter tteh initial form', 'Lo', 0, None),
    0xFB69: ('arabic letter tteh medial form', 'Lo', 0, None),
    0xFB6A: ('arabic letter veh isolated form', 'Lo', 0, None),
    0xFB6B: ('arabic letter veh final form', 'Lo', 0, None),
    0xFB6C: ('arabic letter veh initial form', 'Lo', 0, None),
    0xFB6D: ('arabic letter veh medial form', 'Lo', 0, None),
    0xFB6E: ('arabic letter peheh isolated form', 'Lo', 0, None),
    0xFB6F: ('arabic letter peheh final form', 'Lo', 0, None),
    0xFB70: ('arabic letter peheh initial form', 'Lo', 0, None),
    0xFB71: ('arabic letter peheh medial form', 'Lo', 0, None),
    0xFB72: ('arabic letter dyeh isolated form', 'Lo', 0, None),
    0xFB73: ('arabic letter dyeh final form', 'Lo', 0, None),
    0xFB74: ('arabic letter dyeh initial form', 'Lo', 0, None),
    0xFB75: ('arabic letter dyeh medial form', 'Lo', 0, None),
    0xFB76: ('arabic letter nyeh isolated form', 'Lo', 0, None),
    0xFB77: ('arabic letter nyeh final form', 'Lo', 0, None),
    0xFB78: ('arabic letter nyeh initial form', 'Lo', 0, None),
    0xFB79: ('arabic letter nyeh medial form', 'Lo', 0, None),
    0xFB7A: ('arabic letter tcheh isolated form', 'Lo', 0, None),
    0xFB7B: ('arabic letter tcheh final form', 'Lo', 0, None),
    0xFB7C: ('arabic letter tcheh initial form', 'Lo', 0, None),
    0xFB7D: ('arabic letter tcheh medial form', 'Lo', 0, None),
    0xFB7E: ('arabic letter tcheheh isolated form', 'Lo', 0, None),
    0xFB7F: ('arabic letter tcheheh final form', 'Lo', 0, None),
    0xFB80: ('arabic letter tcheheh initial form', 'Lo', 0, None),
    0xFB81: ('arabic letter tcheheh medial form', 'Lo', 0, None),
    0xFB82: ('arabic letter ddahal isolated form', 'Lo', 0, None),
    0xFB83: ('arabic letter ddahal final form', 'Lo', 0, None),
    0xFB84: ('arabic letter dahal isolated form', 'Lo', 0, None),
    0xFB85: ('arabic letter dahal final form', 'Lo', 0, None),
    0xFB86: ('arabic letter dul isolated form', 'Lo', 0, None),
    0xFB87: ('arabic letter dul final form', 'Lo', 0, None),
    0xFB88: ('arabic letter ddal isolated form', 'Lo', 0, None),
    0xFB89: ('arabic letter ddal final form', 'Lo', 0, None),
    0xFB8A: ('arabic letter jeh isolated form', 'Lo', 0, None),
    0xFB8B: ('arabic letter jeh final form', 'Lo', 0, None),
    0xFB8C: ('arabic letter rreh isolated form', 'Lo', 0, None),
    0xFB8D: ('arabic letter rreh final form', 'Lo', 0, None),
    0xFB8E: ('arabic letter keheh isolated form', 'Lo', 0, None),
    0xFB8F: ('arabic letter keheh final form', 'Lo', 0, None),
    0xFB90: ('arabic letter keheh initial form', 'Lo', 0, None),
    0xFB91: ('arabic letter keheh medial form', 'Lo', 0, None),
    0xFB92: ('arabic letter gaf isolated form', 'Lo', 0, None),
    0xFB93: ('arabic letter gaf final form', 'Lo', 0, None),
    0xFB94: ('arabic letter gaf initial form', 'Lo', 0, None),
    0xFB95: ('arabic letter gaf medial form', 'Lo', 0, None),
    0xFB96: ('arabic letter gueh isolated form', 'Lo', 0, None),
    0xFB97: ('arabic letter gueh final form', 'Lo', 0, None),
    0xFB98: ('arabic letter gueh initial form', 'Lo', 0, None),
    0xFB99: ('arabic letter gueh medial form', 'Lo', 0, None),
    0xFB9A: ('arabic letter ngoeh isolated form', 'Lo', 0, None),
    0xFB9B: ('arabic letter ngoeh final form', 'Lo', 0, None),
    0xFB9C: ('arabic letter ngoeh initial form', 'Lo', 0, None),
    0xFB9D: ('arabic letter ngoeh medial form', 'Lo', 0, None),
    0xFB9E: ('arabic letter noon ghunna isolated form', 'Lo', 0, None),
    0xFB9F: ('arabic letter noon ghunna final form', 'Lo', 0, None),
    0xFBA0: ('arabic letter rnoon isolated form', 'Lo', 0, None),
    0xFBA1: ('arabic letter rnoon final form', 'Lo', 0, None),
    0xFBA2: ('arabic letter rnoon initial form', 'Lo', 0, None),
    0xFBA3: ('arabic letter rnoon medial form', 'Lo', 0, None),
    0xFBA4: ('arabic letter heh with yeh above isolated form', 'Lo', 0, None),
    0xFBA5: ('arabic letter heh with yeh above final form', 'Lo', 0, None),
    0xFBA6: ('arabic letter heh goal isolated form', 'Lo', 0, None),
    0xFBA7: ('arabic letter heh goal final form', 'Lo', 0, None),
    0xFBA8: ('arabic letter heh goal initial form', 'Lo', 0, None),
    0xFBA9: ('arabic letter heh goal medial form', 'Lo', 0, None),
    0xFBAA: ('arabic letter heh doachashmee isolated form', 'Lo', 0, None),
    0xFBAB: ('arabic letter heh doachashmee final form', 'Lo', 0, None),
    0xFBAC: ('arabic letter heh doachashmee initial form', 'Lo', 0, None),
    0xFBAD: ('arabic letter heh doachashmee medial form', 'Lo', 0, None),
    0xFBAE: ('arabic letter yeh barree isolated form', 'Lo', 0, None),
    0xFBAF: ('arabic letter yeh barree final form', 'Lo', 0, None),
    0xFBB0: ('arabic letter yeh barree with hamza above isolated form', 'Lo', 0, None),
    0xFBB1: ('arabic letter yeh barree with hamza above final form', 'Lo', 0, None),
    0xFBB2: ('arabic symbol dot above', 'Sk', 0, None),
    0xFBB3: ('arabic symbol dot below', 'Sk', 0, None),
    0xFBB4: ('arabic symbol two dots above', 'Sk', 0, None),
    0xFBB5: ('arabic symbol two dots below', 'Sk', 0, None),
    0xFBB6: ('arabic symbol three dots above', 'Sk', 0, None),
    0xFBB7: ('arabic symbol three dots below', 'Sk', 0, None),
    0xFBB8: ('arabic symbol three dots pointing downwards above', 'Sk', 0, None),
    0xFBB9: ('arabic symbol three dots pointing downwards below', 'Sk', 0, None),
    0xFBBA: ('arabic symbol four dots above', 'Sk', 0, None),
    0xFBBB: ('arabic symbol four dots below', 'Sk', 0, None),
    0xFBBC: ('arabic symbol double vertical bar below', 'Sk', 0, None),
    0xFBBD: ('arabic symbol two dots vertically above', 'Sk', 0, None),
    0xFBBE: ('arabic symbol two dots vertically below', 'Sk', 0, None),
    0xFBBF: ('arabic symbol ring', 'Sk', 0, None),
    0xFBC0: ('arabic symbol small tah above', 'Sk', 0, None),
    0xFBC1: ('arabic symbol small tah below', 'Sk', 0, None),
    0xFBC2: ('arabic symbol wasla above', 'Sk', 0, None),
    0xFBD3: ('arabic letter ng isolated form', 'Lo', 0, None),
    0xFBD4: ('arabic letter ng final form', 'Lo', 0, None),
    0xFBD5: ('arabic letter ng initial form', 'Lo', 0, None),
    0xFBD6: ('arabic letter ng medial form', 'Lo', 0, None),
    0xFBD7: ('arabic letter u isolated form', 'Lo', 0, None),
    0xFBD8: ('arabic letter u final form', 'Lo', 0, None),
    0xFBD9: ('arabic letter oe isolated form', 'Lo', 0, None),
    0xFBDA: ('arabic letter oe final form', 'Lo', 0, None),
    0xFBDB: ('arabic letter yu isolated form', 'Lo', 0, None),
    0xFBDC: ('arabic letter yu final form', 'Lo', 0, None),
    0xFBDD: ('arabic letter u with hamza above isolated form', 'Lo', 0, None),
    0xFBDE: ('arabic letter ve isolated form', 'Lo', 0, None),
    0xFBDF: ('arabic letter ve final form', 'Lo', 0, None),
    0xFBE0: ('arabic letter kirghiz oe isolated form', 'Lo', 0, None),
    0xFBE1: ('arabic letter kirghiz oe final form', 'Lo', 0, None),
    0xFBE2: ('arabic letter kirghiz yu isolated form', 'Lo', 0, None),
    0xFBE3: ('arabic letter kirghiz yu final form', 'Lo', 0, None),
    0xFBE4: ('arabic letter e isolated form', 'Lo', 0, None),
    0xFBE5: ('arabic letter e final form', 'Lo', 0, None),
    0xFBE6: ('arabic letter e initial form', 'Lo', 0, None),
    0xFBE7: ('arabic letter e medial form', 'Lo', 0, None),
    0xFBE8: ('arabic letter uighur kazakh kirghiz alef maksura initial form', 'Lo', 0, None),
    0xFBE9: ('arabic letter uighur kazakh kirghiz alef maksura medial form', 'Lo', 0, None),
    0xFBEA: ('arabic ligature yeh with hamza above with alef isolated form', 'Lo', 0, None),
    0xFBEB: ('arabic ligature yeh with hamza above with alef final form', 'Lo', 0, None),
    0xFBEC: ('arabic ligature yeh with hamza above with ae isolated form', 'Lo', 0, None),
    0xFBED: ('arabic ligature yeh with hamza above with ae final form', 'Lo', 0, None),
    0xFBEE: ('arabic ligature yeh with hamza above with waw isolated form', 'Lo', 0, None),
    0xFBEF: ('arabic ligature yeh with hamza above with waw final form', 'Lo', 0, None),
    0xFBF0: ('arabic ligature yeh with hamza above with u isolated form', 'Lo', 0, None),
    0xFBF1: ('arabic ligature yeh with hamza above with u final form', 'Lo', 0, None),
    0xFBF2: ('arabic ligature yeh with hamza above with oe isolated form', 'Lo', 0, None),
    0xFBF3: ('arabic ligature yeh with hamza above with oe final form', 'Lo', 0, None),
    0xFBF4: ('arabic ligature yeh with hamza above with yu isolated form', 'Lo', 0, None),
    0xFBF5: ('arabic ligature yeh with hamza above with yu final form', 'Lo', 0, None),
    0xFBF6: ('arabic ligature yeh with hamza above with e isolated form', 'Lo', 0, None),
    0xFBF7: ('arabic ligature yeh with hamza above with e final form', 'Lo', 0, None),
    0xFBF8: ('arabic ligature yeh with hamza above with e initial form', 'Lo', 0, None),
    0xFBF9: ('arabic ligature uighur kirghiz yeh with hamza above with alef maksura isolated form', 'Lo', 0, None),
    0xFBFA: ('arabic ligature uighur kirghiz yeh with hamza above with alef maksura final form', 'Lo', 0, None),
    0xFBFB: ('arabic ligature uighur kirghiz yeh with hamza above with alef maksura initial form', 'Lo', 0, None),
    0xFBFC: ('arabic letter farsi yeh isolated form', 'Lo', 0, None),
    0xFBFD: ('arabic letter farsi yeh final form', 'Lo', 0, None),
    0xFBFE: ('arabic letter farsi yeh initial form', 'Lo', 0, None),
    0xFBFF: ('arabic letter farsi yeh medial form', 'Lo', 0, None),
    0xFC00: ('arabic ligature yeh with hamza above with jeem isolated form', 'Lo', 0, None),
    0xFC01: ('arabic ligature yeh with hamza above with hah isolated form', 'Lo', 0, None),
    0xFC02: ('arabic ligature yeh with hamza above with meem isolated form', 'Lo', 0, None),
    0xFC03: ('arabic ligature yeh with hamza above with alef maksura isolated form', 'Lo', 0, None),
    0xFC04: ('arabic ligature yeh with hamza above with yeh isolated form', 'Lo', 0, None),
    0xFC05: ('arabic ligature beh with jeem isolated form', 'Lo', 0, None),
    0xFC06: ('arabic ligature beh with hah isolated form', 'Lo', 0, None),
    0xFC07: ('arabic ligature beh with khah isolated form', 'Lo', 0, None),
    0xFC08: ('arabic ligature beh with meem isolated form', 'Lo', 0, None),
    0xFC09: ('arabic ligature beh with alef maksura isolated form', 'Lo', 0, None),
    0xFC0A: ('arabic ligature beh with yeh isolated form', 'Lo', 0, None),
    0xFC0B: ('arabic ligature teh with jeem isolated form', 'Lo', 0, None),
    0xFC0C: ('arabic ligature teh with hah isolated form', 'Lo', 0, None),
    0xFC0D: ('arabic ligature teh with khah isolated form', 'Lo', 0, None),
    0xFC0E: ('arabic ligature teh with meem isolated form', 'Lo', 0, None),
    0xFC0F: ('arabic ligature teh with alef maksura isolated form', 'Lo', 0, None),
    0xFC10: ('arabic ligature teh with yeh isolated form', 'Lo', 0, None),
    0xFC11: ('arabic ligature theh with jeem isolated form', 'Lo', 0, None),
    0xFC12: ('arabic ligature theh with meem isolated form', 'Lo', 0, None),
    0xFC13: ('arabic ligature theh with alef maksura isolated form', 'Lo', 0, None),
    0xFC14: ('arabic ligature theh with yeh isolated form', 'Lo', 0, None),
    0xFC15: ('arabic ligature jeem with hah isolated form', 'Lo', 0, None),
    0xFC16: ('arabic ligature jeem with meem isolated form', 'Lo', 0, None),
    0xFC17: ('arabic ligature hah with jeem isolated form', 'Lo', 0, None),
    0xFC18: ('arabic ligature hah with meem isolated form', 'Lo', 0, None),
    0xFC19: ('arabic ligature khah with jeem isolated form', 'Lo', 0, None),
    0xFC1A: ('arabic ligature khah with hah isolated form', 'Lo', 0, None),
    0xFC1B: ('arabic ligature khah with meem isolated form', 'Lo', 0, None),
    0xFC1C: ('arabic ligature seen with jeem isolated form', 'Lo', 0, None),
    0xFC1D: ('arabic ligature seen with hah isolated form', 'Lo', 0, None),
    0xFC1E: ('arabic ligature seen with khah isolated form', 'Lo', 0, None),
    0xFC1F: ('arabic ligature seen with meem isolated form', 'Lo', 0, None),
    0xFC20: ('arabic ligature sad with hah isolated form', 'Lo', 0, None),
    0xFC21: ('arabic ligature sad with meem isolated form', 'Lo', 0, None),
    0xFC22: ('arabic ligature dad with jeem isolated form', 'Lo', 0, None),
    0xFC23: ('arabic ligature dad with hah isolated form', 'Lo', 0, None),
    0xFC24: ('arabic ligature dad with khah isolated form', 'Lo', 0, None),
    0xFC25: ('arabic ligature dad with meem isolated form', 'Lo', 0, None),
    0xFC26: ('arabic ligature tah with hah isolated form', 'Lo', 0, None),
    0xFC27: ('arabic ligature tah with meem isolated form', 'Lo', 0, None),
    0xFC28: ('arabic ligature zah with meem isolated form', 'Lo', 0, None),
    0xFC29: ('arabic ligature ain with jeem isolated form', 'Lo', 0, None),
    0xFC2A: ('arabic ligature ain with meem isolated form', 'Lo', 0, None),
    0xFC2B: ('arabic ligature ghain with jeem isolated form', 'Lo', 0, None),
    0xFC2C: ('arabic ligature ghain with meem isolated form', 'Lo', 0, None),
    0xFC2D: ('arabic ligature feh with jeem isolated form', 'Lo', 0, None),
    0xFC2E: ('arabic ligature feh with hah isolated form', 'Lo', 0, None),
    0xFC2F: ('arabic ligature feh with khah isolated form', 'Lo', 0, None),
    0xFC30: ('arabic ligature feh with meem isolated form', 'Lo', 0, None),
    0xFC31: ('arabic ligature feh with alef maksura isolated form', 'Lo', 0, None),
    0xFC32: ('arabic ligature feh with yeh isolated form', 'Lo', 0, None),
    0xFC33: ('arabic ligature qaf with hah isolated form', 'Lo', 0, None),
    0xFC34: ('arabic ligature qaf with meem isolated form', 'Lo', 0, None),
    0xFC35: ('arabic ligature qaf with alef maksura isolated form', 'Lo', 0, None),
    0xFC36: ('arabic ligature qaf with yeh isolated form', 'Lo', 0, None),
    0xFC37: ('arabic ligature kaf with alef isolated form', 'Lo', 0, None),
    0xFC38: ('arabic ligature kaf with jeem isolated form', 'Lo', 0, None),
    0xFC39: ('arabic ligature kaf with hah isolated form', 'Lo', 0, None),
    0xFC3A: ('arabic ligature kaf with khah isolated form', 'Lo', 0, None),
    0xFC3B: ('arabic ligature kaf with lam isolated form', 'Lo', 0, None),
    0xFC3C: ('arabic ligature kaf with meem isolated form', 'Lo', 0, None),
    0xFC3D: ('arabic ligature kaf with alef maksura isolated form', 'Lo', 0, None),
    0xFC3E: ('arabic ligature kaf with yeh isolated form', 'Lo', 0, None),
    0xFC3F: ('arabic ligature lam with jeem isolated form', 'Lo', 0, None),
    0xFC40: ('arabic ligature lam with hah isolated form', 'Lo', 0, None),
    0xFC41: ('arabic ligature lam with khah isolated form', 'Lo', 0, None),
    0xFC42: ('arabic ligature lam with meem isolated form', 'Lo', 0, None),
    0xFC43: ('arabic ligature lam with alef maksura isolated form', 'Lo', 0, None),
    0xFC44: ('arabic ligature lam with yeh isolated form', 'Lo', 0, None),
    0xFC45: ('arabic ligature meem with jeem isolated form', 'Lo', 0, None),
    0xFC46: ('arabic ligature meem with hah isolated form', 'Lo', 0, None),
    0xFC47: ('arabic ligature meem with khah isolated form', 'Lo', 0, None),
    0xFC48: ('arabic ligature meem with meem isolated form', 'Lo', 0, None),
    0xFC49: ('arabic ligature meem with alef maksura isolated form', 'Lo', 0, None),
    0xFC4A: ('arabic ligature meem with yeh isolated form', 'Lo', 0, None),
    0xFC4B: ('arabic ligature noon with jeem isolated form', 'Lo', 0, None),
    0xFC4C: ('arabic ligature noon with hah isolated form', 'Lo', 0, None),
    0xFC4D: ('arabic ligature noon with khah isolated form', 'Lo', 0, None),
    0xFC4E: ('arabic ligature noon with meem isolated form', 'Lo', 0, None),
    0xFC4F: ('arabic ligature noon with alef maksura isolated form', 'Lo', 0, None),
    0xFC50: ('arabic ligature noon with yeh isolated form', 'Lo', 0, None),
    0xFC51: ('arabic ligature heh with jeem isolated form', 'Lo', 0, None),
    0xFC52: ('arabic ligature heh with meem isolated form', 'Lo', 0, None),
    0xFC53: ('arabic ligature heh with alef maksura isolated form', 'Lo', 0, None),
    0xFC54: ('arabic ligature heh with yeh isolated form', 'Lo', 0, None),
    0xFC55: ('arabic ligature yeh with jeem isolated form', 'Lo', 0, None),
    0xFC56: ('arabic ligature yeh with hah isolated form', 'Lo', 0, None),
    0xFC57: ('arabic ligature yeh with khah isolated form', 'Lo', 0, None),
    0xFC58: ('arabic ligature yeh with meem isolated form', 'Lo', 0, None),
    0xFC59: ('arabic ligature yeh with alef maksura isolated form', 'Lo', 0, None),
    0xFC5A: ('arabic ligature yeh with yeh isolated form', 'Lo', 0, None),
    0xFC5B: ('arabic ligature thal with superscript alef isolated form', 'Lo', 0, None),
    0xFC5C: ('arabic ligature reh with superscript alef isolated form', 'Lo', 0, None),
    0xFC5D: ('arabic ligature alef maksura with superscript alef isolated form', 'Lo', 0, None),
    0xFC5E: ('arabic ligature shadda with dammatan isolated form', 'Lo', 0, None),
    0xFC5F: ('arabic ligature shadda with kasratan isolated form', 'Lo', 0, None),
    0xFC60: ('arabic ligature shadda with fatha isolated form', 'Lo', 0, None),
    0xFC61: ('arabic ligature shadda with damma isolated form', 'Lo', 0, None),
    0xFC62: ('arabic ligature shadda with kasra isolated form', 'Lo', 0, None),
    0xFC63: ('arabic ligature shadda with superscript alef isolated form', 'Lo', 0, None),
    0xFC64: ('arabic ligature yeh with hamza above with reh final form', 'Lo', 0, None),
    0xFC65: ('arabic ligature yeh with hamza above with zain final form', 'Lo', 0, None),
    0xFC66: ('arabic ligature yeh with hamza above with meem final form', 'Lo', 0, None),
    0xFC67: ('arabic ligature yeh with hamza above with noon final form', 'Lo', 0, None),
    0xFC68: ('arabic ligature yeh with hamza above with alef maksura final form', 'Lo', 0, None),
    0xFC69: ('arabic ligature yeh with hamza above with yeh final form', 'Lo', 0, None),
    0xFC6A: ('arabic ligature beh with reh final form', 'Lo', 0, None),
    0xFC6B: ('arabic ligature beh with zain final form', 'Lo', 0, None),
    0xFC6C: ('arabic ligature beh with meem final form', 'Lo', 0, None),
    0xFC6D: ('arabic ligature beh with noon final form', 'Lo', 0, None),
    0xFC6E: ('arabic ligature beh with alef maksura final form', 'Lo', 0, None),
    0xFC6F: ('arabic ligature beh with yeh final form', 'Lo', 0, None),
    0xFC70: ('arabic ligature teh with reh final form', 'Lo', 0, None),
    0xFC71: ('arabic ligature teh with zain final form', 'Lo', 0, None),
    0xFC72: ('arabic ligature teh with meem final form', 'Lo', 0, None),
    0xFC73: ('arabic ligature teh with noon final form', 'Lo', 0, None),
    0xFC74: ('arabic ligature teh with alef maksura final form', 'Lo', 0, None),
    0xFC75: ('arabic ligature teh with yeh final form', 'Lo', 0, None),
    0xFC76: ('arabic ligature theh with reh final form', 'Lo', 0, None),
    0xFC77: ('arabic ligature theh with zain final form', 'Lo', 0, None),
    0xFC78: ('arabic ligature theh with meem final form', 'Lo', 0, None),
    0xFC79: ('arabic ligature theh with noon final form', 'Lo', 0, None),
    0xFC7A: ('arabic ligature theh with alef maksura final form', 'Lo', 0, None),
    0xFC7B: ('arabic ligature theh with yeh final form', 'Lo', 0, None),
    0xFC7C: ('arabic ligature feh with alef maksura final form', 'Lo', 0, None),
    0xFC7D: ('arabic ligature feh with yeh final form', 'Lo', 0, None),
    0xFC7E: ('arabic ligature qaf with alef maksura final form', 'Lo', 0, None),
    0xFC7F: ('arabic ligature qaf with yeh final form', 'Lo', 0, None),
    0xFC80: ('arabic ligature kaf with alef final form', 'Lo', 0, None),
    0xFC81: ('arabic ligature kaf with lam final form', 'Lo', 0, None),
    0xFC82: ('arabic ligature kaf with meem final form', 'Lo', 0, None),
    0xFC83: ('arabic ligature kaf with alef maksura final form', 'Lo', 0, None),
    0xFC84: ('arabic ligature kaf with yeh final form', 'Lo', 0, None),
    0xFC85: ('arabic ligature lam with meem final form', 'Lo', 0, None),
    0xFC86: ('arabic ligature lam with alef maksura final form', 'Lo', 0, None),
    0xFC87: ('arabic ligature lam with yeh final form', 'Lo', 0, None),
    0xFC88: ('arabic ligature meem with alef final form', 'Lo', 0, None),
    0xFC89: ('arabic ligature meem with meem final form', 'Lo', 0, None),
    0xFC8A: ('arabic ligature noon with reh final form', 'Lo', 0, None),
    0xFC8B: ('arabic ligature noon with zain final form', 'Lo', 0, None),
    0xFC8C: ('arabic ligature noon with meem final form', 'Lo', 0, None),
    0xFC8D: ('arabic ligature noon with noon final form', 'Lo', 0, None),
    0xFC8E: ('arabic ligature noon with alef maksura final form', 'Lo', 0, None),
    0xFC8F: ('arabic ligature noon with yeh final form', 'Lo', 0, None),
    0xFC90: ('arabic ligature alef maksura with superscript alef final form', 'Lo', 0, None),
    0xFC91: ('arabic ligature yeh with reh final form', 'Lo', 0, None),
    0xFC92: ('arabic ligature yeh with zain final form', 'Lo', 0, None),
    0xFC93: ('arabic ligature yeh with meem final form', 'Lo', 0, None),
    0xFC94: ('arabic ligature yeh with noon final form', 'Lo', 0, None),
    0xFC95: ('arabic ligature yeh with alef maksura final form', 'Lo', 0, None),
    0xFC96: ('arabic ligature yeh with yeh final form', 'Lo', 0, None),
    0xFC97: ('arabic ligature yeh with hamza above with jeem initial form', 'Lo', 0, None),
    0xFC98: ('arabic ligature yeh with hamza above with hah initial form', 'Lo', 0, None),
    0xFC99: ('arabic ligature yeh with hamza above with khah initial form', 'Lo', 0, None),
    0xFC9A: ('arabic ligature yeh with hamza above with meem initial form', 'Lo', 0, None),
    0xFC9B: ('arabic ligature yeh with hamza above with heh initial form', 'Lo', 0, None),
    0xFC9C: ('arabic ligature beh with jeem initial form', 'Lo', 0, None),
    0xFC9D: ('arabic ligature beh with hah initial form', 'Lo', 0, None),
    0xFC9E: ('arabic ligature beh with khah initial form', 'Lo', 0, None),
    0xFC9F: ('arabic ligature beh with meem initial form', 'Lo', 0, None),
    0xFCA0: ('arabic ligature beh with heh initial form', 'Lo', 0, None),
    0xFCA1: ('arabic ligature teh with jeem initial form', 'Lo', 0, None),
    0xFCA2: ('arabic ligature teh with hah initial form', 'Lo', 0, None),
    0xFCA3: ('arabic ligature teh with khah initial form', 'Lo', 0, None),
    0xFCA4: ('arabic ligature teh with meem initial form', 'Lo', 0, None),
    0xFCA5: ('arabic ligature teh with heh initial form', 'Lo', 0, None),
    0xFCA6: ('arabic ligature theh with meem initial form', 'Lo', 0, None),
    0xFCA7: ('arabic ligature jeem with hah initial form', 'Lo', 0, None),
    0xFCA8: ('arabic ligature jeem with meem initial form', 'Lo', 0, None),
    0xFCA9: ('arabic ligature hah with jeem initial form', 'Lo', 0, None),
    0xFCAA: ('arabic ligature hah with meem initial form', 'Lo', 0, None),
    0xFCAB: ('arabic ligature khah with jeem initial form', 'Lo', 0, None),
    0xFCAC: ('arabic ligature khah with meem initial form', 'Lo', 0, None),
    0xFCAD: ('arabic ligature seen with jeem initial form', 'Lo', 0, None),
    0xFCAE: ('arabic ligature seen with hah initial form', 'Lo', 0, None),
    0xFCAF: ('arabic ligature seen with khah initial form', 'Lo', 0, None),
    0xFCB0: ('arabic ligature seen with meem initial form', 'Lo', 0, None),
    0xFCB1: ('arabic ligature sad with hah initial form', 'Lo', 0, None),
    0xFCB2: ('arabic ligature sad with khah initial form', 'Lo', 0, None),
    0xFCB3: ('arabic ligature sad with meem initial form', 'Lo', 0, None),
    0xFCB4: ('arabic ligature dad with jeem initial form', 'Lo', 0, None),
    0xFCB5: ('arabic ligature dad with hah initial form', 'Lo', 0, None),
    0xFCB6: ('arabic ligature dad with khah initial form', 'Lo', 0, None),
    0xFCB7: ('arabic ligature dad with meem initial form', 'Lo', 0, None),
    0xFCB8: ('arabic ligature tah with hah initial form', 'Lo', 0, None),
    0xFCB9: ('arabic ligature zah with meem initial form', 'Lo', 0, None),
    0xFCBA: ('arabic ligature ain with jeem initial form', 'Lo', 0, None),
    0xFCBB: ('arabic ligature ain with meem initial form', 'Lo', 0, None),
    0xFCBC: ('arabic ligature ghain with jeem initial form', 'Lo', 0, None),
    0xFCBD: ('arabic ligature ghain with meem initial form', 'Lo', 0, None),
    0xFCBE: ('arabic ligature feh with jeem initial form', 'Lo', 0, None),
    0xFCBF: ('arabic ligature feh with hah initial form', 'Lo', 0, None),
    0xFCC0: ('arabic ligature feh with khah initial form', 'Lo', 0, None),
    0xFCC1: ('arabic ligature feh with meem initial form', 'Lo', 0, None),
    0xFCC2: ('arabic ligature qaf with hah initial form', 'Lo', 0, None),
    0xFCC3: ('arabic ligature qaf with meem initial form', 'Lo', 0, None),
    0xFCC4: ('arabic ligature kaf with jeem initial form', 'Lo', 0, None),
    0xFCC5: ('arabic ligature kaf with hah initial form', 'Lo', 0, None),
    0xFCC6: ('arabic ligature kaf with khah initial form', 'Lo', 0, None),
    0xFCC7: ('arabic ligature kaf with lam initial form', 'Lo', 0, None),
    0xFCC8: ('arabic ligature kaf with meem initial form', 'Lo', 0, None),
    0xFCC9: ('arabic ligature lam with jeem initial form', 'Lo', 0, None),
    0xFCCA: ('arabic ligature lam with hah initial form', 'Lo', 0, None),
    0xFCCB: ('arabic ligature lam with khah initial form', 'Lo', 0, None),
    0xFCCC: ('arabic ligature lam with meem initial form', 'Lo', 0, None),
    0xFCCD: ('arabic ligature lam with heh initial form', 'Lo', 0, None),
    0xFCCE: ('arabic ligature meem with jeem initial form', 'Lo', 0, None),
    0xFCCF: ('arabic ligature meem with hah initial form', 'Lo', 0, None),
    0xFCD0: ('arabic ligature meem with khah initial form', 'Lo', 0, None),
    0xFCD1: ('arabic ligature meem with meem initial form', 'Lo', 0, None),
    0xFCD2: ('arabic ligature noon with jeem initial form', 'Lo', 0, None),
    0xFCD3: ('arabic ligature noon with hah initial form', 'Lo', 0, None),
    0xFCD4: ('arabic ligature noon with khah initial form', 'Lo', 0, None),
    0xFCD5: ('arabic ligature noon with meem initial form', 'Lo', 0, None),
    0xFCD6: ('arabic ligature noon with heh initial form', 'Lo', 0, None),
    0xFCD7: ('arabic ligature heh with jeem initial form', 'Lo', 0, None),
    0xFCD8: ('arabic ligature heh with meem initial form', 'Lo', 0, None),
    0xFCD9: ('arabic ligature heh with superscript alef initial form', 'Lo', 0, None),
    0xFCDA: ('arabic ligature yeh with jeem initial form', 'Lo', 0, None),
    0xFCDB: ('arabic ligature yeh with hah initial form', 'Lo', 0, None),
    0xFCDC: ('arabic ligature yeh with khah initial form', 'Lo', 0, None),
    0xFCDD: ('arabic ligature yeh with meem initial form', 'Lo', 0, None),
    0xFCDE: ('arabic ligature yeh with heh initial form', 'Lo', 0, None),
    0xFCDF: ('arabic ligature yeh with hamza above with meem medial form', 'Lo', 0, None),
    0xFCE0: ('arabic ligature yeh with hamza above with heh medial form', 'Lo', 0, None),
    0xFCE1: ('arabic ligature beh with meem medial form', 'Lo', 0, None),
    0xFCE2: ('arabic ligature beh with heh medial form', 'Lo', 0, None),
    0xFCE3: ('arabic ligature teh with meem medial form', 'Lo', 0, None),
    0xFCE4: ('arabic ligature teh with heh medial form', 'Lo', 0, None),
    0xFCE5: ('arabic ligature theh with meem medial form', 'Lo', 0, None),
    0xFCE6: ('arabic ligature theh with heh medial form', 'Lo', 0, None),
    0xFCE7: ('arabic ligature seen with meem medial form', 'Lo', 0, None),
    0xFCE8: ('arabic ligature seen with heh medial form', 'Lo', 0, None),
    0xFCE9: ('arabic ligature sheen with meem medial form', 'Lo', 0, None),
    0xFCEA: ('arabic ligature sheen with heh medial form', 'Lo', 0, None),
    0xFCEB: ('arabic ligature kaf with lam medial form', 'Lo', 0, None),
    0xFCEC: ('arabic ligature kaf with meem medial form', 'Lo', 0, None),
    0xFCED: ('arabic ligature lam with meem medial form', 'Lo', 0, None),
    0xFCEE: ('arabic ligature noon with meem medial form', 'Lo', 0, None),
    0xFCEF: ('arabic ligature noon with heh medial form', 'Lo', 0, None),
    0xFCF0: ('arabic ligature yeh with meem medial form', 'Lo', 0, None),
    0xFCF1: ('arabic ligature yeh with heh medial form', 'Lo', 0, None),
    0xFCF2: ('arabic ligature shadda with fatha medial form', 'Lo', 0, None),
    0xFCF3: ('arabic ligature shadda with damma medial form', 'Lo', 0, None),
    0xFCF4: ('arabic ligature shadda with kasra medial form', 'Lo', 0, None),
    0xFCF5: ('arabic ligature tah with alef maksura isolated form', 'Lo', 0, None),
    0xFCF6: ('arabic ligature tah with yeh isolated form', 'Lo', 0, None),
    0xFCF7: ('arabic ligature ain with alef maksura isolated form', 'Lo', 0, None),
    0xFCF8: ('arabic ligature ain with yeh isolated form', 'Lo', 0, None),
    0xFCF9: ('arabic ligature ghain with alef maksura isolated form', 'Lo', 0, None),
    0xFCFA: ('arabic ligature ghain with yeh isolated form', 'Lo', 0, None),
    0xFCFB: ('arabic ligature seen with alef maksura isolated form', 'Lo', 0, None),
    0xFCFC: ('arabic ligature seen with yeh isolated form', 'Lo', 0, None),
    0xFCFD: ('arabic ligature sheen with alef maksura isolated form', 'Lo', 0, None),
    0xFCFE: ('arabic ligature sheen with yeh isolated form', 'Lo', 0, None),
    0xFCFF: ('arabic ligature hah with alef maksura isolated form', 'Lo', 0, None),
    0xFD00: ('arabic ligature hah with yeh isolated form', 'Lo', 0, None),
    0xFD01: ('arabic ligature jeem with alef maksura isolated form', 'Lo', 0, None),
    0xFD02: ('arabic ligature jeem with yeh isolated form', 'Lo', 0, None),
    0xFD03: ('arabic ligature khah with alef maksura isolated form', 'Lo', 0, None),
    0xFD04: ('arabic ligature khah with yeh isolated form', 'Lo', 0, None),
    0xFD05: ('arabic ligature sad with alef maksura isolated form', 'Lo', 0, None),
    0xFD06: ('arabic ligature sad with yeh isolated form', 'Lo', 0, None),
    0xFD07: ('arabic ligature dad with alef maksura isolated form', 'Lo', 0, None),
    0xFD08: ('arabic ligature dad with yeh isolated form', 'Lo', 0, None),
    0xFD09: ('arabic ligature sheen with jeem isolated form', 'Lo', 0, None),
    0xFD0A: ('arabic ligature sheen with hah isolated form', 'Lo', 0, None),
    0xFD0B: ('arabic ligature sheen with khah isolated form', 'Lo', 0, None),
    0xFD0C: ('arabic ligature sheen with meem isolated form', 'Lo', 0, None),
    0xFD0D: ('arabic ligature sheen with reh isolated form', 'Lo', 0, None),
    0xFD0E: ('arabic ligature seen with reh isolated form', 'Lo', 0, None),
    0xFD0F: ('arabic ligature sad with reh isolated form', 'Lo', 0, None),
    0xFD10: ('arabic ligature dad with reh isolated form', 'Lo', 0, None),
    0xFD11: ('arabic ligature tah with alef maksura final form', 'Lo', 0, None),
    0xFD12: ('arabic ligature tah with yeh final form', 'Lo', 0, None),
    0xFD13: ('arabic ligature ain with alef maksura final form', 'Lo', 0, None),
    0xFD14: ('arabic ligature ain with yeh final form', 'Lo', 0, None),
    0xFD15: ('arabic ligature ghain with alef maksura final form', 'Lo', 0, None),
    0xFD16: ('arabic ligature ghain with yeh final form', 'Lo', 0, None),
    0xFD17: ('arabic ligature seen with alef maksura final form', 'Lo', 0, None),
    0xFD18: ('arabic ligature seen with yeh final form', 'Lo', 0, None),
    0xFD19: ('arabic ligature sheen with alef maksura final form', 'Lo', 0, None),
    0xFD1A: ('arabic ligature sheen with yeh final form', 'Lo', 0, None),
    0xFD1B: ('arabic ligature hah with alef maksura final form', 'Lo', 0, None),
    0xFD1C: ('arabic ligature hah with yeh final form', 'Lo', 0, None),
    0xFD1D: ('arabic ligature jeem with alef maksura final form', 'Lo', 0, None),
    0xFD1E: ('arabic ligature jeem with yeh final form', 'Lo', 0, None),
    0xFD1F: ('arabic ligature khah with alef maksura final form', 'Lo', 0, None),
    0xFD20: ('arabic ligature khah with yeh final form', 'Lo', 0, None),
    0xFD21: ('arabic ligature sad with alef maksura final form', 'Lo', 0, None),
    0xFD22: ('arabic ligature sad with yeh final form', 'Lo', 0, None),
    0xFD23: ('arabic ligature dad with alef maksura final form', 'Lo', 0, None),
    0xFD24: ('arabic ligature dad with yeh final form', 'Lo', 0, None),
    0xFD25: ('arabic ligature sheen with jeem final form', 'Lo', 0, None),
    0xFD26: ('arabic ligature sheen with hah final form', 'Lo', 0, None),
    0xFD27: ('arabic ligature sheen with khah final form', 'Lo', 0, None),
    0xFD28: ('arabic ligature sheen with meem final form', 'Lo', 0, None),
    0xFD29: ('arabic ligature sheen with reh final form', 'Lo', 0, None),
    0xFD2A: ('arabic ligature seen with reh final form', 'Lo', 0, None),
    0xFD2B: ('arabic ligature sad with reh final form', 'Lo', 0, None),
    0xFD2C: ('arabic ligature dad with reh final form', 'Lo', 0, None),
    0xFD2D: ('arabic ligature sheen with jeem initial form', 'Lo', 0, None),
    0xFD2E: ('arabic ligature sheen with hah initial form', 'Lo', 0, None),
    0xFD2F: ('arabic ligature sheen with khah initial form', 'Lo', 0, None),
    0xFD30: ('arabic ligature sheen with meem initial form', 'Lo', 0, None),
    0xFD31: ('arabic ligature seen with heh initial form', 'Lo', 0, None),
    0xFD32: ('arabic ligature sheen with heh initial form', 'Lo', 0, None),
    0xFD33: ('arabic ligature tah with meem initial form', 'Lo', 0, None),
    0xFD34: ('arabic ligature seen with jeem medial form', 'Lo', 0, None),
    0xFD35: ('arabic ligature seen with hah medial form', 'Lo', 0, None),
    0xFD36: ('arabic ligature seen with khah medial form', 'Lo', 0, None),
    0xFD37: ('arabic ligature sheen with jeem medial form', 'Lo', 0, None),
    0xFD38: ('arabic ligature sheen with hah medial form', 'Lo', 0, None),
    0xFD39: ('arabic ligature sheen with khah medial form', 'Lo', 0, None),
    0xFD3A: ('arabic ligature tah with meem medial form', 'Lo', 0, None),
    0xFD3B: ('arabic ligature zah with meem medial form', 'Lo', 0, None),
    0xFD3C: ('arabic ligature alef with fathatan final form', 'Lo', 0, None),
    0xFD3D: ('arabic ligature alef with fathatan isolated form', 'Lo', 0, None),
    0xFD3E: ('ornate left parenthesis', 'Pe', 0, None),
    0xFD3F: ('ornate right parenthesis', 'Ps', 0, None),
    0xFD40: ('arabic ligature rahimahu allaah', 'So', 0, None),
    0xFD41: ('arabic ligature radi allaahu anh', 'So', 0, None),
    0xFD42: ('arabic ligature radi allaahu anhaa', 'So', 0, None),
    0xFD43: ('arabic ligature radi allaahu anhum', 'So', 0, None),
    0xFD44: ('arabic ligature radi allaahu anhumaa', 'So', 0, None),
    0xFD45: ('arabic ligature radi allaahu anhunna', 'So', 0, None),
    0xFD46: ('arabic ligature sallallaahu alayhi wa-aalih', 'So', 0, None),
    0xFD47: ('arabic ligature alayhi as-salaam', 'So', 0, None),
    0xFD48: ('arabic ligature alayhim as-salaam', 'So', 0, None),
    0xFD49: ('arabic ligature alayhimaa as-salaam', 'So', 0, None),
    0xFD4A: ('arabic ligature alayhi as-salaatu was-salaam', 'So', 0, None),
    0xFD4B: ('arabic ligature quddisa sirrah', 'So', 0, None),
    0xFD4C: ('arabic ligature sallallahu alayhi waaalihee wa-sallam', 'So', 0, None),
    0xFD4D: ('arabic ligature alayhaa as-salaam', 'So', 0, None),
    0xFD4E: ('arabic ligature tabaaraka wa-taaalaa', 'So', 0, None),
    0xFD4F: ('arabic ligature rahimahum allaah', 'So', 0, None),
    0xFD50: ('arabic ligature teh with jeem with meem initial form', 'Lo', 0, None),
    0xFD51: ('arabic ligature teh with hah with jeem final form', 'Lo', 0, None),
    0xFD52: ('arabic ligature teh with hah with jeem initial form', 'Lo', 0, None),
    0xFD53: ('arabic ligature teh with hah with meem initial form', 'Lo', 0, None),
    0xFD54: ('arabic ligature teh with khah with meem initial form', 'Lo', 0, None),
    0xFD55: ('arabic ligature teh with meem with jeem initial form', 'Lo', 0, None),
    0xFD56: ('arabic ligature teh with meem with hah initial form', 'Lo', 0, None),
    0xFD57: ('arabic ligature teh with meem with khah initial form', 'Lo', 0, None),
    0xFD58: ('arabic ligature jeem with meem with hah final form', 'Lo', 0, None),
    0xFD59: ('arabic ligature jeem with meem with hah initial form', 'Lo', 0, None),
    0xFD5A: ('arabic ligature hah with meem with yeh final form', 'Lo', 0, None),
    0xFD5B: ('arabic ligature hah with meem with alef maksura final form', 'Lo', 0, None),
    0xFD5C: ('arabic ligature seen with hah with jeem initial form', 'Lo', 0, None),
    0xFD5D: ('arabic ligature seen with jeem with hah initial form', 'Lo', 0, None),
    0xFD5E: ('arabic ligature seen with jeem with alef maksura final form', 'Lo', 0, None),
    0xFD5F: ('arabic ligature seen with meem with hah final form', 'Lo', 0, None),
    0xFD60: ('arabic ligature seen with meem with hah initial form', 'Lo', 0, None),
    0xFD61: ('arabic ligature seen with meem with jeem initial form', 'Lo', 0, None),
    0xFD62: ('arabic ligature seen with meem with meem final form', 'Lo', 0, None),
    0xFD63: ('arabic ligature seen with meem with meem initial form', 'Lo', 0, None),
    0xFD64: ('arabic ligature sad with hah with hah final form', 'Lo', 0, None),
    0xFD65: ('arabic ligature sad with hah with hah initial form', 'Lo', 0, None),
    0xFD66: ('arabic ligature sad with meem with meem final form', 'Lo', 0, None),
    0xFD67: ('arabic ligature sheen with hah with meem final form', 'Lo', 0, None),
    0xFD68: ('arabic ligature sheen with hah with meem initial form', 'Lo', 0, None),
    0xFD69: ('arabic ligature sheen with jeem with yeh final form', 'Lo', 0, None),
    0xFD6A: ('arabic ligature sheen with meem with khah final form', 'Lo', 0, None),
    0xFD6B: ('arabic ligature sheen with meem with khah initial form', 'Lo', 0, None),
    0xFD6C: ('arabic ligature sheen with meem with meem final form', 'Lo', 0, None),
    0xFD6D: ('arabic ligature sheen with meem with meem initial form', 'Lo', 0, None),
    0xFD6E: ('arabic ligature dad with hah with alef maksura final form', 'Lo', 0, None),
    0xFD6F: ('arabic ligature dad with khah with meem final form', 'Lo', 0, None),
    0xFD70: ('arabic ligature dad with khah with meem initial form', 'Lo', 0, None),
    0xFD71: ('arabic ligature tah with meem with hah final form', 'Lo', 0, None),
    0xFD72: ('arabic ligature tah with meem with hah initial form', 'Lo', 0, None),
    0xFD73: ('arabic ligature tah with meem with meem initial form', 'Lo', 0, None),
    0xFD74: ('arabic ligature tah with meem with yeh final form', 'Lo', 0, None),
    0xFD75: ('arabic ligature ain with jeem with meem final form', 'Lo', 0, None),
    0xFD76: ('arabic ligature ain with meem with meem final form', 'Lo', 0, None),
    0xFD77: ('arabic ligature ain with meem with meem initial form', 'Lo', 0, None),
    0xFD78: ('arabic ligature ain with meem with alef maksura final form', 'Lo', 0, None),
    0xFD79: ('arabic ligature ghain with meem with meem final form', 'Lo', 0, None),
    0xFD7A: ('arabic ligature ghain with meem with yeh final form', 'Lo', 0, None),
    0xFD7B: ('arabic ligature ghain with meem with alef maksura final form', 'Lo', 0, None),
    0xFD7C: ('arabic ligature feh with khah with meem final form', 'Lo', 0, None),
    0xFD7D: ('arabic ligature feh with khah with meem initial form', 'Lo', 0, None),
    0xFD7E: ('arabic ligature qaf with meem with hah final form', 'Lo', 0, None),
    0xFD7F: ('arabic ligature qaf with meem with meem final form', 'Lo', 0, None),
    0xFD80: ('arabic ligature lam with hah with meem final form', 'Lo', 0, None),
    0xFD81: ('arabic ligature lam with hah with yeh final form', 'Lo', 0, None),
    0xFD82: ('arabic ligature lam with hah with alef maksura final form', 'Lo', 0, None),
    0xFD83: ('arabic ligature lam with jeem with jeem initial form', 'Lo', 0, None),
    0xFD84: ('arabic ligature lam with jeem with jeem final form', 'Lo', 0, None),
    0xFD85: ('arabic ligature lam with khah with meem final form', 'Lo', 0, None),
    0xFD86: ('arabic ligature lam with khah with meem initial form', 'Lo', 0, None),
    0xFD87: ('arabic ligature lam with meem with hah final form', 'Lo', 0, None),
    0xFD88: ('arabic ligature lam with meem with hah initial form', 'Lo', 0, None),
    0xFD89: ('arabic ligature meem with hah with jeem initial form', 'Lo', 0, None),
    0xFD8A: ('arabic ligature meem with hah with meem initial form', 'Lo', 0, None),
    0xFD8B: ('arabic ligature meem with hah with yeh final form', 'Lo', 0, None),
    0xFD8C: ('arabic ligature meem with jeem with hah initial form', 'Lo', 0, None),
    0xFD8D: ('arabic ligature meem with jeem with meem initial form', 'Lo', 0, None),
    0xFD8E: ('arabic ligature meem with khah with jeem initial form', 'Lo', 0, None),
    0xFD8F: ('arabic ligature meem with khah with meem initial form', 'Lo', 0, None),
    0xFD92: ('arabic ligature meem with jeem with khah initial form', 'Lo', 0, None),
    0xFD93: ('arabic ligature heh with meem with jeem initial form', 'Lo', 0, None),
    0xFD94: ('arabic ligature heh with meem with meem initial form', 'Lo', 0, None),
    0xFD95: ('arabic ligature noon with hah with meem initial form', 'Lo', 0, None),
    0xFD96: ('arabic ligature noon with hah with alef maksura final form', 'Lo', 0, None),
    0xFD97: ('arabic ligature noon with jeem with meem final form', 'Lo', 0, None),
    0xFD98: ('arabic ligature noon with jeem with meem initial form', 'Lo', 0, None),
    0xFD99: ('arabic ligature noon with jeem with alef maksura final form', 'Lo', 0, None),
    0xFD9A: ('arabic ligature noon with meem with yeh final form', 'Lo', 0, None),
    0xFD9B: ('arabic ligature noon with meem with alef maksura final form', 'Lo', 0, None),
    0xFD9C: ('arabic ligature yeh with meem with meem final form', 'Lo', 0, None),
    0xFD9D: ('arabic ligature yeh with meem with meem initial form', 'Lo', 0, None),
    0xFD9E: ('arabic ligature beh with khah with yeh final form', 'Lo', 0, None),
    0xFD9F: ('arabic ligature teh with jeem with yeh final form', 'Lo', 0, None),
    0xFDA0: ('arabic ligature teh with jeem with alef maksura final form', 'Lo', 0, None),
    0xFDA1: ('arabic ligature teh with khah with yeh final form', 'Lo', 0, None),
    0xFDA2: ('arabic ligature teh with khah with alef maksura final form', 'Lo', 0, None),
    0xFDA3: ('arabic ligature teh with meem with yeh final form', 'Lo', 0, None),
    0xFDA4: ('arabic ligature teh with meem with alef maksura final form', 'Lo', 0, None),
    0xFDA5: ('arabic ligature jeem with meem with yeh final form', 'Lo', 0, None),
    0xFDA6: ('arabic ligature jeem with hah with alef maksura final form', 'Lo', 0, None),
    0xFDA7: ('arabic ligature jeem with meem with alef maksura final form', 'Lo', 0, None),
    0xFDA8: ('arabic ligature seen with khah with alef maksura final form', 'Lo', 0, None),
    0xFDA9: ('arabic ligature sad with hah with yeh final form', 'Lo', 0, None),
    0xFDAA: ('arabic ligature sheen with hah with yeh final form', 'Lo', 0, None),
    0xFDAB: ('arabic ligature dad with hah with yeh final form', 'Lo', 0, None),
    0xFDAC: ('arabic ligature lam with jeem with yeh final form', 'Lo', 0, None),
    0xFDAD: ('arabic ligature lam with meem with yeh final form', 'Lo', 0, None),
    0xFDAE: ('arabic ligature yeh with hah with yeh final form', 'Lo', 0, None),
    0xFDAF: ('arabic ligature yeh with jeem with yeh final form', 'Lo', 0, None),
    0xFDB0: ('arabic ligature yeh with meem with yeh final form', 'Lo', 0, None),
    0xFDB1: ('arabic ligature meem with meem with yeh final form', 'Lo', 0, None),
    0xFDB2: ('arabic ligature qaf with meem with yeh final form', 'Lo', 0, None),
    0xFDB3: ('arabic ligature noon with hah with yeh final form', 'Lo', 0, None),
    0xFDB4: ('arabic ligature qaf with meem with hah initial form', 'Lo', 0, None),
    0xFDB5: ('arabic ligature lam with hah with meem initial form', 'Lo', 0, None),
    0xFDB6: ('arabic ligature ain with meem with yeh final form', 'Lo', 0, None),
    0xFDB7: ('arabic ligature kaf with meem with yeh final form', 'Lo', 0, None),
    0xFDB8: ('arabic ligature noon with jeem with hah initial form', 'Lo', 0, None),
    0xFDB9: ('arabic ligature meem with khah with yeh final form', 'Lo', 0, None),
    0xFDBA: ('arabic ligature lam with jeem with meem initial form', 'Lo', 0, None),
    0xFDBB: ('arabic ligature kaf with meem with meem final form', 'Lo', 0, None),
    0xFDBC: ('arabic ligature lam with jeem with meem final form', 'Lo', 0, None),
    0xFDBD: ('arabic ligature noon with jeem with hah final form', 'Lo', 0, None),
    0xFDBE: ('arabic ligature jeem with hah with yeh final form', 'Lo', 0, None),
    0xFDBF: ('arabic ligature hah with jeem with yeh final form', 'Lo', 0, None),
    0xFDC0: ('arabic ligature meem with jeem with yeh final form', 'Lo', 0, None),
    0xFDC1: ('arabic ligature feh with meem with yeh final form', 'Lo', 0, None),
    0xFDC2: ('arabic ligature beh with hah with yeh final form', 'Lo', 0, None),
    0xFDC3: ('arabic ligature kaf with meem with meem initial form', 'Lo', 0, None),
    0xFDC4: ('arabic ligature ain with jeem with meem initial form', 'Lo', 0, None),
    0xFDC5: ('arabic ligature sad with meem with meem initial form', 'Lo', 0, None),
    0xFDC6: ('arabic ligature seen with khah with yeh final form', 'Lo', 0, None),
    0xFDC7: ('arabic ligature noon with jeem with yeh final form', 'Lo', 0, None),
    0xFDCF: ('arabic ligature salaamuhu alaynaa', 'So', 0, None),
    0xFDF0: ('arabic ligature salla used as koranic stop sign isolated form', 'Lo', 0, None),
    0xFDF1: ('arabic ligature qala used as koranic stop sign isolated form', 'Lo', 0, None),
    0xFDF2: ('arabic ligature allah isolated form', 'Lo', 0, None),
    0xFDF3: ('arabic ligature akbar isolated form', 'Lo', 0, None),
    0xFDF4: ('arabic ligature mohammad isolated form', 'Lo', 0, None),
    0xFDF5: ('arabic ligature salam isolated form', 'Lo', 0, None),
    0xFDF6: ('arabic ligature rasoul isolated form', 'Lo', 0, None),
    0xFDF7: ('arabic ligature alayhe isolated form', 'Lo', 0, None),
    0xFDF8: ('arabic ligature wasallam isolated form', 'Lo', 0, None),
    0xFDF9: ('arabic ligature salla isolated form', 'Lo', 0, None),
    0xFDFA: ('arabic ligature sallallahou alayhe wasallam', 'Lo', 0, None),
    0xFDFB: ('arabic ligature jallajalalouhou', 'Lo', 0, None),
    0xFDFC: ('rial sign', 'Sc', 0, None),
    0xFDFD: ('arabic ligature bismillah ar-rahman ar-raheem', 'So', 0, None),
    0xFDFE: ('arabic ligature subhaanahu wa taaalaa', 'So', 0, None),
    0xFDFF: ('arabic ligature azza wa jall', 'So', 0, None),
    0xFE70: ('arabic fathatan isolated form', 'Lo', 0, None),
    0xFE71: ('arabic tatweel with fathatan above', 'Lo', 0, None),
    0xFE72: ('arabic dammatan isolated form', 'Lo', 0, None),
    0xFE73: ('arabic tail fragment', 'Lo', 0, None),
    0xFE74: ('arabic kasratan isolated form', 'Lo', 0, None),
    0xFE76: ('arabic fatha isolated form', 'Lo', 0, None),
    0xFE77: ('arabic fatha medial form', 'Lo', 0, None),
    0xFE78: ('arabic damma isolated form', 'Lo', 0, None),
    0xFE79: ('arabic damma medial form', 'Lo', 0, None),
    0xFE7A: ('arabic kasra isolated form', 'Lo', 0, None),
    0xFE7B: ('arabic kasra medial form', 'Lo', 0, None),
    0xFE7C: ('arabic shadda isolated form', 'Lo', 0, None),
    0xFE7D: ('arabic shadda medial form', 'Lo', 0, None),
    0xFE7E: ('arabic sukun isolated form', 'Lo', 0, None),
    0xFE7F: ('arabic sukun medial form', 'Lo', 0, None),
    0xFE80: ('arabic letter hamza isolated form', 'Lo', 0, None),
    0xFE81: ('arabic letter alef with madda above isolated form', 'Lo', 0, None),
    0xFE82: ('arabic letter alef with madda above final form', 'Lo', 0, None),
    0xFE83: ('arabic letter alef with hamza above isolated form', 'Lo', 0, None),
    0xFE84: ('arabic letter alef with hamza above final form', 'Lo', 0, None),
    0xFE85: ('arabic letter waw with hamza above isolated form', 'Lo', 0, None),
    0xFE86: ('arabic letter waw with hamza above final form', 'Lo', 0, None),
    0xFE87: ('arabic letter alef with hamza below isolated form', 'Lo', 0, None),
    0xFE88: ('arabic letter alef with hamza below final form', 'Lo', 0, None),
    0xFE89: ('arabic letter yeh with hamza above isolated form', 'Lo', 0, None),
    0xFE8A: ('arabic letter yeh with hamza above final form', 'Lo', 0, None),
    0xFE8B: ('arabic letter yeh with hamza above initial form', 'Lo', 0, None),
    0xFE8C: ('arabic letter yeh with hamza above medial form', 'Lo', 0, None),
    0xFE8D: ('arabic letter alef isolated form', 'Lo', 0, None),
    0xFE8E: ('arabic letter alef final form', 'Lo', 0, None),
    0xFE8F: ('arabic letter beh isolated form', 'Lo', 0, None),
    0xFE90: ('arabic letter beh final form', 'Lo', 0, None),
    0xFE91: ('arabic letter beh initial form', 'Lo', 0, None),
    0xFE92: ('arabic letter beh medial form', 'Lo', 0, None),
    0xFE93: ('arabic letter teh marbuta isolated form', 'Lo', 0, None),
    0xFE94: ('arabic letter teh marbuta final form', 'Lo', 0, None),
    0xFE95: ('arabic letter teh isolated form', 'Lo', 0, None),
    0xFE96: ('arabic letter teh final form', 'Lo', 0, None),
    0xFE97: ('arabic letter teh initial form', 'Lo', 0, None),
    0xFE98: ('arabic letter teh medial form', 'Lo', 0, None),
    0xFE99: ('arabic letter theh isolated form', 'Lo', 0, None),
    0xFE9A: ('arabic letter theh final form', 'Lo', 0, None),
    0xFE9B: ('arabic letter theh initial form', 'Lo', 0, None),
    0xFE9C: ('arabic letter theh medial form', 'Lo', 0, None),
    0xFE9D: ('arabic letter jeem isolated form', 'Lo', 0, None),
    0xFE9E: ('arabic letter jeem final form', 'Lo', 0, None),
    0xFE9F: ('arabic letter jeem initial form', 'Lo', 0, None),
    0xFEA0: ('arabic letter jeem medial form', 'Lo', 0, None),
    0xFEA1: ('arabic letter hah isolated form', 'Lo', 0, None),
    0xFEA2: ('arabic letter hah final form', 'Lo', 0, None),
    0xFEA3: ('arabic letter hah initial form', 'Lo', 0, None),
    0xFEA4: ('arabic letter hah medial form', 'Lo', 0, None),
    0xFEA5: ('arabic letter khah isolated form', 'Lo', 0, None),
    0xFEA6: ('arabic letter khah final form', 'Lo', 0, None),
    0xFEA7: ('arabic letter khah initial form', 'Lo', 0, None),
    0xFEA8: ('arabic letter khah medial form', 'Lo', 0, None),
    0xFEA9: ('arabic letter dal isolated form', 'Lo', 0, None),
    0xFEAA: ('arabic letter dal final form', 'Lo', 0, None),
    0xFEAB: ('arabic letter thal isolated form', 'Lo', 0, None),
    0xFEAC: ('arabic letter thal final form', 'Lo', 0, None),
    0xFEAD: ('arabic letter reh isolated form', 'Lo', 0, None),
    0xFEAE: ('arabic letter reh final form', 'Lo', 0, None),
    0xFEAF: ('arabic letter zain isolated form', 'Lo', 0, None),
    0xFEB0: ('arabic letter zain final form', 'Lo', 0, None),
    0xFEB1: ('arabic letter seen isolated form', 'Lo', 0, None),
    0xFEB2: ('arabic letter seen final form', 'Lo', 0, None),
    0xFEB3: ('arabic letter seen initial form', 'Lo', 0, None),
    0xFEB4: ('arabic letter seen medial form', 'Lo', 0, None),
    0xFEB5: ('arabic letter sheen isolated form', 'Lo', 0, None),
    0xFEB6: ('arabic letter sheen final form', 'Lo', 0, None),
    0xFEB7: ('arabic letter sheen initial form', 'Lo', 0, None),
    0xFEB8: ('arabic letter sheen medial form', 'Lo', 0, None),
    0xFEB9: ('arabic letter sad isolated form', 'Lo', 0, None),
    0xFEBA: ('arabic letter sad final form', 'Lo', 0, None),
    0xFEBB: ('arabic letter sad initial form', 'Lo', 0, None),
    0xFEBC: ('arabic letter sad medial form', 'Lo', 0, None),
    0xFEBD: ('arabic letter dad isolated form', 'Lo', 0, None),
    0xFEBE: ('arabic letter dad final form', 'Lo', 0, None),
    0xFEBF: ('arabic letter dad initial form', 'Lo', 0, None),
    0xFEC0: ('arabic letter dad medial form', 'Lo', 0, None),
    0xFEC1: ('arabic letter tah isolated form', 'Lo', 0, None),
    0xFEC2: ('arabic letter tah final form', 'Lo', 0, None),
    0xFEC3: ('arabic letter tah initial form', 'Lo', 0, None),
    0xFEC4: ('arabic letter tah medial form', 'Lo', 0, None),
    0xFEC5: ('arabic letter zah isolated form', 'Lo', 0, None),
    0xFEC6: ('arabic letter zah final form', 'Lo', 0, None),
    0xFEC7: ('arabic letter zah initial form', 'Lo', 0, None),
    0xFEC8: ('arabic letter zah medial form', 'Lo', 0, None),
    0xFEC9: ('arabic letter ain isolated form', 'Lo', 0, None),
    0xFECA: ('arabic letter ain final form', 'Lo', 0, None),
    0xFECB: ('arabic letter ain initial form', 'Lo', 0, None),
    0xFECC: ('arabic letter ain medial form', 'Lo', 0, None),
    0xFECD: ('arabic letter ghain isolated form', 'Lo', 0, None),
    0xFECE: ('arabic letter ghain final form', 'Lo', 0, None),
    0xFECF: ('arabic letter ghain initial form', 'Lo', 0, None),
    0xFED0: ('arabic letter ghain medial form', 'Lo', 0, None),
    0xFED1: ('arabic letter feh isolated form', 'Lo', 0, None),
    0xFED2: ('arabic letter feh final form', 'Lo', 0, None),
    0xFED3: ('arabic letter feh initial form', 'Lo', 0, None),
    0xFED4: ('arabic letter feh medial form', 'Lo', 0, None),
    0xFED5: ('arabic letter qaf isolated form', 'Lo', 0, None),
    0xFED6: ('arabic letter qaf final form', 'Lo', 0, None),
    0xFED7: ('arabic letter qaf initial form', 'Lo', 0, None),
    0xFED8: ('arabic letter qaf medial form', 'Lo', 0, None),
    0xFED9: ('arabic letter kaf isolated form', 'Lo', 0, None),
    0xFEDA: ('arabic letter kaf final form', 'Lo', 0, None),
    0xFEDB: ('arabic letter kaf initial form', 'Lo', 0, None),
    0xFEDC: ('arabic letter kaf medial form', 'Lo', 0, None),
    0xFEDD: ('arabic letter lam isolated form', 'Lo', 0, None),
    0xFEDE: ('arabic letter lam final form', 'Lo', 0, None),
    0xFEDF: ('arabic letter lam initial form', 'Lo', 0, None),
    0xFEE0: ('arabic letter lam medial form', 'Lo', 0, None),
    0xFEE1: ('arabic letter meem isolated form', 'Lo', 0, None),
    0xFEE2: ('arabic letter meem final form', 'Lo', 0, None),
    0xFEE3: ('arabic letter meem initial form', 'Lo', 0, None),
    0xFEE4: ('arabic letter meem medial form', 'Lo', 0, None),
    0xFEE5: ('arabic letter noon isolated form', 'Lo', 0, None),
    0xFEE6: ('arabic letter noon final form', 'Lo', 0, None),
    0xFEE7: ('arabic letter noon initial form', 'Lo', 0, None),
    0xFEE8: ('arabic letter noon medial form', 'Lo', 0, None),
    0xFEE9: ('arabic letter heh isolated form', 'Lo', 0, None),
    0xFEEA: ('arabic letter heh final form', 'Lo', 0, None),
    0xFEEB: ('arabic letter heh initial form', 'Lo', 0, None),
    0xFEEC: ('arabic letter heh medial form', 'Lo', 0, None),
    0xFEED: ('arabic letter waw isolated form', 'Lo', 0, None),
    0xFEEE: ('arabic letter waw final form', 'Lo', 0, None),
    0xFEEF: ('arabic letter alef maksura isolated form', 'Lo', 0, None),
    0xFEF0: ('arabic letter alef maksura final form', 'Lo', 0, None),
    0xFEF1: ('arabic letter yeh isolated form', 'Lo', 0, None),
    0xFEF2: ('arabic letter yeh final form', 'Lo', 0, None),
    0xFEF3: ('arabic letter yeh initial form', 'Lo', 0, None),
    0xFEF4: ('arabic letter yeh medial form', 'Lo', 0, None),
    0xFEF5: ('arabic ligature lam with alef with madda above isolated form', 'Lo', 0, None),
    0xFEF6: ('arabic ligature lam with alef with madda above final form', 'Lo', 0, None),
    0xFEF7: ('arabic ligature lam with alef with hamza above isolated form', 'Lo', 0, None),
    0xFEF8: ('arabic ligature lam with alef with hamza above final form', 'Lo', 0, None),
    0xFEF9: ('arabic ligature lam with alef with hamza below isolated form', 'Lo', 0, None),
    0xFEFA: ('arabic ligature lam with alef with hamza below final form', 'Lo', 0, None),
    0xFEFB: ('arabic ligature lam with alef isolated form', 'Lo', 0, None),
    0xFEFC: ('arabic ligature lam with alef final form', 'Lo', 0, None),
    0xFEFF: ('zero width no-break space', 'Cf', 0, None),
}

# (starter, mark) -> primary composite
COMPOSITIONS = {
    (0x0627, 0x0653): 0x0622,
    (0x0627, 0x0654): 0x0623,
    (0x0627, 0x0655): 0x0625,
    (0x0648, 0x0654): 0x0624,
    (0x064A, 0x0654): 0x0626,
    (0x06C1, 0x0654): 0x06C2,
    (0x06D2, 0x0654): 0x06D3,
    (0x06D5, 0x0654): 0x06C0,
}
