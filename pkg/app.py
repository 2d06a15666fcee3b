import locale
import os

from supercontact.cli import cli


if __name__ == '__main__':
    # Locale should be set before runing Click
    lang, encoding = locale.getlocale()
    if not lang or not encoding:
        os.environ['LC_ALL'] = 'en_US.utf-8'
    cli()
