public abstract class DocumentCreator {
    public abstract Document create();

    public void openNew() {
        Document doc = create();
        doc.open();
    }
}
