public class EncryptionDecorator extends StreamDecorator {
    public EncryptionDecorator(DataSource wrapped) {
        super(wrapped);
    }

    public void write(String chunk) {
        inner.write(chunk);
    }
}
