import bs4

soup = bs4.BeautifulSoup("<p>hi</p>", "html.parser")
print(soup.p.text)
