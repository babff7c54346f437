public class EncryptionDecorator extends StreamDecorator {
    public EncryptionDecorator(DataSource wrapped) {
        super(wrapped);
    }

    public void write(String chunk) {
        System.out.println("ciphertext " + chunk);
    }
}
